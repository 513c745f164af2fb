//! Random connected pieces of a hexagon's dual graph, counted by exhaustive
//! search and by Pfaffians.

use lozenge::counting::{count_matchings_oracle, count_matchings_pfaffian};
use lozenge::duality::dual_graph;
use lozenge::lattice::hexagon;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> lozenge::Result<()> {
    let g = dual_graph(&hexagon(4, 4, 4)?);
    let adj = g.adjacency();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..10 {
        // grow a connected vertex set from a random seed
        let target = rng.gen_range(6..=30);
        let mut keep = vec![false; g.vertex_count()];
        let mut frontier = vec![rng.gen_range(0..g.vertex_count())];
        let mut size = 0;
        while size < target {
            let Some(&v) = frontier.choose(&mut rng) else { break };
            frontier.retain(|&u| u != v);
            if keep[v] {
                continue;
            }
            keep[v] = true;
            size += 1;
            frontier.extend(adj[v].iter().map(|&(u, _)| u).filter(|&u| !keep[u]));
        }
        let (sub, _) = g.induced(&keep);
        let o = count_matchings_oracle(&sub)?;
        let p = count_matchings_pfaffian(&sub)?;
        assert_eq!(o, p);
        println!("trial {trial}: {} vertices, {o} perfect matchings", sub.vertex_count());
    }
    Ok(())
}
