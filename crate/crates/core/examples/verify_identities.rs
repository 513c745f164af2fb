//! Every identity at one small parameter point, with its parts.

use lozenge::verify::{check, IdentityId, Params};

fn main() -> lozenge::Result<()> {
    let points = [
        (IdentityId::I1_9, Params::new(2, 2)),
        (IdentityId::I1_10, Params::new(3, 2)),
        (IdentityId::I1_11, Params::new(1, 1)),
        (IdentityId::I1_12, Params::new(2, 1)),
        (IdentityId::T2_1_even, Params::new(6, 2).with_ks(&[2, 3])),
        (IdentityId::T2_1_cored, Params::new(4, 2).with_ks(&[2]).with_x(2)),
        (IdentityId::E3_1, Params::new(7, 2).with_ks(&[2])),
        (IdentityId::E3_5, Params::new(3, 2).with_ks(&[2])),
        (IdentityId::E3_7, Params::new(3, 2).with_ks(&[3])),
        (IdentityId::E3_9, Params::new(3, 3).with_ks(&[2])),
        (IdentityId::E3_10, Params::new(3, 1).with_ks(&[1, 3])),
        (IdentityId::E3_12, Params::new(4, 1).with_ks(&[2, 4])),
        (IdentityId::E3_13, Params::new(5, 1).with_ks(&[2]).with_x(2)),
        (IdentityId::FOUR_CLASS, Params::new(1, 1)),
    ];
    for (id, p) in points {
        let c = check(id, &p)?;
        println!("{id:<10} {p:<20} {c}");
        for part in &c.parts {
            let mark = if part.verdict { "OK" } else { "FAIL" };
            println!("{:>32} {}: {} = {} {mark}", "", part.label, part.lhs.expr, part.rhs.expr);
        }
    }
    Ok(())
}
