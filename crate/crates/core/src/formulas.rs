//! Closed-form product formulas for symmetric tilings of holed hexagons.
//!
//! Every evaluation is exact: products are accumulated as big rationals and
//! the final value must be an integer, otherwise [`Error::NonIntegral`] is
//! returned.
//!
//! The counting functions return the number of tilings invariant under the
//! half turn (the matchings of the half-turn orbit graph), not the plain
//! tiling count.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{param, Error, Result};

/// Index lists attached to a hole set of a half-width `a` hexagon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleLists {
    /// `[a-1]` without `a - k`.
    pub l: Vec<u32>,
    /// `[a]` without `a - k + 1`.
    pub q: Vec<u32>,
}

pub fn hole_lists(a: u32, ks: &[u32]) -> Result<HoleLists> {
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return param(format!("hole positions must increase strictly, got {ks:?}"));
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k > a) {
        return param(format!("hole position {k} outside 1..={a}"));
    }
    let l = (1..a).filter(|&i| !ks.iter().any(|&k| a - k == i)).collect();
    let q = (1..=a).filter(|&i| !ks.iter().any(|&k| a - k + 1 == i)).collect();
    Ok(HoleLists { l, q })
}

static FACTORIALS: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `n!`, from a table shared across threads.
pub fn factorial(n: u32) -> BigUint {
    let mut table = FACTORIALS.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n as usize {
        let next = table.last().unwrap() * BigUint::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// `C(n, k)` for integer `n` (zero outside `0 <= k <= n`).
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    factorial(n as u32) / (factorial(k as u32) * factorial((n - k) as u32))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat_u(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn integral(v: BigRational, what: &str) -> Result<BigUint> {
    if !v.is_integer() {
        return Err(Error::NonIntegral(format!("{what} = {v}")));
    }
    let n = v.to_integer();
    if n.is_negative() {
        return Err(Error::NonIntegral(format!("{what} is negative: {n}")));
    }
    Ok(n.magnitude().clone())
}

/// Number of plane partitions in an `a x b x c` box.
pub fn macmahon_box(a: u32, b: u32, c: u32) -> BigUint {
    // prod_{i,j} (i+j+c-1)! (i+j-2)! / ((i+j-1)! (i+j+c-2)!) telescopes over k
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=a {
        for j in 1..=b {
            num *= factorial(i + j + c - 1) * factorial(i + j - 2);
            den *= factorial(i + j - 1) * factorial(i + j + c - 2);
        }
    }
    num / den
}

fn vandermonde(xs: &[u32]) -> BigRational {
    let mut r = BigRational::one();
    for (n, &u) in xs.iter().enumerate() {
        for &v in &xs[n + 1..] {
            r *= rat(v as i64 - u as i64);
        }
    }
    r
}

/// `prod (X + m)^e` over the given exponent table.
fn power_table(center: i64, exps: impl Iterator<Item = (i64, u32)>) -> BigInt {
    exps.fold(BigInt::one(), |acc, (m, e)| acc * num_traits::pow(BigInt::from(center + m), e as usize))
}

/// Polynomial part of the even-width count, evaluated at `x`.
///
/// With `n = |q|` and `X = x + n`, the leading block is
/// `((x+1)(x+2)^2...(x+n)^n...(x+2n-1))^2` when `|l| = n - 1`. When the
/// innermost hole sits on the vertical axis, `|l| = n` and the block runs
/// over `x, ..., x+2n` with the peak exponent `n` held three times.
///
/// The inner products contribute `(X-m)(X+m)` for `m = i+1, ..., l_i` on
/// `l`, and for `m = i, ..., q_i-1` (or `i+1, ..., q_i-1` in the second
/// shape) on `q`.
pub fn eval_q(l: &[u32], q: &[u32], x: i64) -> Result<BigInt> {
    let n = q.len() as i64;
    let big_x = x + n;
    let mut r = if l.len() + 1 == q.len() {
        let block = power_table(big_x, (-n + 1..n).map(|m| (m, (n - m.abs()) as u32)));
        &block * &block
    } else if l.len() == q.len() {
        let block = power_table(big_x, (-n..=n).map(|m| (m, n.min(n + 1 - m.abs()) as u32)));
        &block * &block
    } else {
        return param(format!("list lengths {} and {} are incompatible", l.len(), q.len()));
    };
    let pair = |m: i64| BigInt::from(big_x - m) * BigInt::from(big_x + m);
    for (i, &li) in (1i64..).zip(l) {
        for m in i + 1..=li as i64 {
            r *= pair(m);
        }
    }
    let start = if l.len() + 1 == q.len() { 0 } else { 1 };
    for (i, &qi) in (1i64..).zip(q) {
        for m in i + start..qi as i64 {
            r *= pair(m);
        }
    }
    Ok(r)
}

/// Polynomial part of the odd-width count, evaluated at `x`.
///
/// With `n = |q|` and `X = x + n` this is
/// `((x+1)(x+2)^2...(x+n)^n(x+n+1)^n...(x+2n))^2` times the square of
/// `prod (X-m+1)(X+m)` over `m = i+1, ..., q_i`.
pub fn eval_s(q: &[u32], x: i64) -> BigInt {
    let n = q.len() as i64;
    let big_x = x + n;
    let block = power_table(big_x, (-n + 1..=n).map(|m| (m, (n + 1 - m.max(1 - m)) as u32)));
    let mut inner = BigInt::one();
    for (i, &qi) in (1i64..).zip(q) {
        for m in i + 1..=qi as i64 {
            inner *= BigInt::from(big_x - m + 1) * BigInt::from(big_x + m);
        }
    }
    &block * &block * &inner * &inner
}

fn require_k1(ks: &[u32]) -> Result<()> {
    if ks.first() == Some(&1) {
        return param("first hole touches the boundary; apply reduce_k1 first");
    }
    Ok(())
}

/// Half-turn symmetric tilings of the holed hexagon of side `2a`, from the
/// product formula over the lists `l` and `q`.
pub fn holed_count_even(a: u32, b: u32, ks: &[u32]) -> Result<BigUint> {
    if a == 0 || b == 0 {
        return param(format!("a and b must be positive, got ({a}, {b})"));
    }
    require_k1(ks)?;
    let HoleLists { l, q } = hole_lists(a, ks)?;
    let s = ks.len() as i64;
    let mut c = if l.len() + 1 == q.len() {
        rat(2)
    } else {
        let lp: i64 = l.iter().map(|&v| v as i64).product();
        let qp: i64 = q.iter().map(|&v| v as i64).product();
        BigRational::new(qp.into(), lp.into())
    };
    for &li in &l {
        c /= rat_u(factorial(2 * li - 1));
    }
    for &qi in &q {
        c /= rat_u(factorial(2 * qi));
    }
    c *= vandermonde(&l) * vandermonde(&q);
    for &li in &l {
        for &qj in &q {
            c /= rat((li + qj) as i64);
        }
    }
    let poly = eval_q(&l, &q, b as i64 + s)?;
    integral(c * BigRational::from_integer(poly), "even holed formula")
}

fn odd_from_list(q: &[u32], b: u32, a: u32) -> Result<BigUint> {
    if q.is_empty() {
        return Ok(BigUint::one());
    }
    let mut c = BigRational::one();
    for &qi in q {
        c /= rat_u(factorial(2 * qi - 1) * factorial(2 * qi));
    }
    let v = vandermonde(q);
    c *= &v * &v;
    for &qi in q {
        for &qj in q {
            c /= rat((qi + qj) as i64);
        }
    }
    let x = (a + b) as i64 - q.len() as i64;
    integral(c * BigRational::from_integer(eval_s(q, x)), "odd holed formula")
}

/// Half-turn symmetric tilings of the holed hexagon of side `2a + 1`.
pub fn holed_count_odd(a: u32, b: u32, ks: &[u32]) -> Result<BigUint> {
    if a == 0 || b == 0 {
        return param(format!("a and b must be positive, got ({a}, {b})"));
    }
    require_k1(ks)?;
    let q = hole_lists(a, ks)?.q;
    odd_from_list(&q, b, a)
}

/// Upper index list of the cored hexagon `cored_hexagon(a, b, ks, x)`:
/// `[a-1]` without `1, ..., x-1` and without `a - k` for every hole.
pub fn cored_list(a: u32, ks: &[u32], x: u32) -> Result<Vec<u32>> {
    if a == 0 || x == 0 || x > a {
        return param(format!("core parameter x={x} outside 1..={a}"));
    }
    if let Some(k) = crate::lattice::core_collision(a, ks, x) {
        return Err(Error::CoreCollision { k, side: 2 * x - 1 });
    }
    let half = a - 1;
    let q = hole_lists(half, ks)?.q;
    Ok(q.into_iter().filter(|&i| i >= x).collect())
}

/// Half-turn symmetric tilings of the cored hexagon of side `2a - 1` with
/// core `2x - 1`: the odd formula on the list from [`cored_list`].
pub fn cored_count(a: u32, b: u32, ks: &[u32], x: u32) -> Result<BigUint> {
    if b == 0 {
        return param("b must be positive");
    }
    require_k1(ks)?;
    let q = cored_list(a, ks, x)?;
    odd_from_list(&q, b, a - 1)
}

/// Tilings of the quarter region with a free vertical side.
///
/// `prod C(a+b+i-1, 2i-1) prod (i_k - i_j)/(i_j + i_k - 1)` for `eps = -1`
/// and `prod C(a+b+i, 2i) prod (i_k - i_j)/(i_j + i_k)` for `eps = 0`.
pub fn d_count(a: u32, b: u32, eps: i32, is: &[u32]) -> Result<BigUint> {
    if is.windows(2).any(|w| w[0] >= w[1]) || is.iter().any(|&i| i == 0 || i > a) {
        return param(format!("index list {is:?} must increase strictly inside 1..={a}"));
    }
    let (a, b) = (a as i64, b as i64);
    let mut r = BigRational::one();
    for &i in is {
        let i = i as i64;
        r *= rat_u(match eps {
            -1 => binomial(a + b + i - 1, 2 * i - 1),
            0 => binomial(a + b + i, 2 * i),
            _ => return param(format!("eps must be -1 or 0, got {eps}")),
        });
    }
    for (n, &u) in is.iter().enumerate() {
        for &v in &is[n + 1..] {
            r *= BigRational::new(BigInt::from(v - u), BigInt::from(u as i64 + v as i64 + eps as i64));
        }
    }
    integral(r, "free boundary formula")
}

/// Index list of the quarter region matching a hole set: `[a]` without
/// `a - k + 1`.
pub fn d_indices(a: u32, ks: &[u32]) -> Result<Vec<u32>> {
    Ok(hole_lists(a, ks)?.q)
}

/// Strips the forced lozenges next to holes touching the vertical sides of
/// `holed_hexagon(a, b, ks)`.
///
/// Each step removes two columns on either side and lengthens the vertical
/// sides by two; the result may be the empty hexagon `a = 0`. Inputs with
/// `k_1 != 1` come back unchanged. The same map applies to a cored hexagon
/// of side `a`.
pub fn reduce_k1(a: u32, b: u32, ks: &[u32]) -> (u32, u32, Vec<u32>) {
    let (mut a, mut b, mut ks) = (a, b, ks.to_vec());
    while ks.first() == Some(&1) && a >= 2 {
        a -= 2;
        b += 1;
        ks = ks[1..].iter().map(|k| k - 1).collect();
    }
    (a, b, ks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn macmahon_values() {
        assert_eq!(macmahon_box(1, 1, 1), n(2));
        assert_eq!(macmahon_box(2, 2, 2), n(20));
        assert_eq!(macmahon_box(3, 3, 3), n(980));
        assert_eq!(macmahon_box(4, 2, 0), n(1));
        assert_eq!(macmahon_box(2, 3, 4), macmahon_box(4, 2, 3));
    }

    #[test]
    fn lists_from_holes() {
        let h = hole_lists(5, &[2, 4]).unwrap();
        assert_eq!((h.l, h.q), (vec![2, 4], vec![1, 3, 5]));
        let h = hole_lists(2, &[2]).unwrap();
        assert_eq!((h.l, h.q), (vec![1], vec![2]));
        assert!(hole_lists(3, &[2, 2]).is_err());
    }

    #[test]
    fn squared_quarter_counts() {
        // values fixed by the orbit-graph counts of the corresponding regions
        assert_eq!(holed_count_even(2, 2, &[]).unwrap(), n(400));
        assert_eq!(d_count(2, 2, -1, &[1, 2]).unwrap(), n(20));
        assert_eq!(holed_count_even(2, 1, &[2]).unwrap(), n(16));
        assert_eq!(holed_count_odd(3, 3, &[2]).unwrap(), n(777924));
        assert_eq!(d_count(3, 3, 0, &[1, 3]).unwrap(), n(882));
        assert_eq!(cored_count(4, 1, &[], 2).unwrap(), n(441));
        assert_eq!(d_count(1, 1, -1, &[1]).unwrap(), n(2));
    }

    #[test]
    fn s_is_a_square() {
        for x in 0..6 {
            let v = eval_s(&[1, 3, 4], x);
            let r = v.sqrt();
            assert_eq!(&r * &r, v);
        }
    }

    #[test]
    fn reduction_strips_boundary_holes() {
        assert_eq!(reduce_k1(4, 1, &[1]), (2, 2, vec![]));
        assert_eq!(reduce_k1(8, 2, &[1, 2, 4]), (4, 4, vec![2]));
        assert_eq!(reduce_k1(8, 2, &[2, 4]), (8, 2, vec![2, 4]));
    }
}
