//! Oracles shared by the integration tests. Nothing here calls into the
//! cone or Schubert code under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

pub fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    if g.is_zero() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Extreme rays of `{x : <x, g> >= 0 for all g}` for a full-dimensional
/// pointed cone in dimension 2 or 3. Every extreme ray of the dual is normal
/// to a facet of the cone, and every facet is spanned by two generators, so
/// it suffices to try perpendiculars (d = 2) or cross products (d = 3) and
/// keep the feasible ones.
pub fn brute_dual(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = gens[0].len();
    let mut candidates = Vec::new();
    match d {
        2 => {
            for g in gens {
                candidates.push(vec![-g[1].clone(), g[0].clone()]);
                candidates.push(vec![g[1].clone(), -g[0].clone()]);
            }
        }
        3 => {
            for (i, a) in gens.iter().enumerate() {
                for b in &gens[i + 1..] {
                    let c = vec![
                        &a[1] * &b[2] - &a[2] * &b[1],
                        &a[2] * &b[0] - &a[0] * &b[2],
                        &a[0] * &b[1] - &a[1] * &b[0],
                    ];
                    candidates.push(c.iter().map(|x| -x).collect());
                    candidates.push(c);
                }
            }
        }
        _ => panic!("brute_dual handles dimensions 2 and 3"),
    }
    let mut rays: Vec<Vec<BigInt>> = candidates
        .into_iter()
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .filter(|c| gens.iter().all(|g| !dot(c, g).is_negative()))
        .map(normalize)
        .collect();
    rays.sort();
    rays.dedup();
    rays
}

/// Random generators of a pointed full-dimensional cone: every vector has a
/// positive last coordinate.
pub fn random_pointed_cone(rng: &mut impl Rng, d: usize) -> Vec<Vec<BigInt>> {
    loop {
        let count = rng.gen_range(d..d + 5);
        let gens: Vec<Vec<BigInt>> = (0..count)
            .map(|_| {
                let mut g: Vec<i64> = (0..d - 1).map(|_| rng.gen_range(-6..=6)).collect();
                g.push(rng.gen_range(1..=6));
                v(&g)
            })
            .collect();
        let full = match d {
            2 => gens.iter().any(|g| &g[0] * &gens[0][1] != &g[1] * &gens[0][0]),
            _ => brute_dual(&gens).len() >= 3 && brute_dual(&brute_dual(&gens)).len() >= 3,
        };
        if full {
            return gens;
        }
    }
}

/// Schubert calculus on `G(2, C^5)`, partitions in the 2 x 3 box.
pub type Partition = (u32, u32);

/// Pieri: `sigma_lambda * sigma_k` is the sum over `nu` obtained by adding
/// `k` boxes, no two in the same column, staying inside the box.
pub fn pieri(lambda: Partition, k: u32) -> Vec<Partition> {
    let (l1, l2) = lambda;
    let mut out = Vec::new();
    for n1 in l1..=3 {
        for n2 in l2..=l1 {
            if n1 + n2 == l1 + l2 + k {
                out.push((n1, n2));
            }
        }
    }
    out
}

type Class = BTreeMap<Partition, i64>;

fn times_special(x: &Class, k: i64) -> Class {
    let mut out = Class::new();
    if !(0..=3).contains(&k) {
        return out;
    }
    for (&lambda, &c) in x {
        for nu in pieri(lambda, k as u32) {
            *out.entry(nu).or_default() += c;
        }
    }
    out
}

/// Giambelli for two rows: `sigma_(a,b) = sigma_a sigma_b - sigma_(a+1) sigma_(b-1)`.
fn times_class(x: &Class, (a, b): Partition) -> Class {
    let (a, b) = (a as i64, b as i64);
    let first = times_special(&times_special(x, a), b);
    let second = times_special(&times_special(x, a + 1), b - 1);
    let mut out = first;
    for (nu, c) in second {
        *out.entry(nu).or_default() -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn g2c5_pairing(lambda: Partition, mu: Partition) -> i64 {
    let start: Class = [(lambda, 1)].into_iter().collect();
    times_class(&start, mu).get(&(3, 3)).copied().unwrap_or(0)
}

pub fn g2c5_partitions() -> Vec<Partition> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=a {
            out.push((a, b));
        }
    }
    out
}
