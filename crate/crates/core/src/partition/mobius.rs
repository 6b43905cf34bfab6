use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{enumerate, ClassFilter, Partition};
use crate::error::Result;

/// Möbius function of the partition lattice.
///
/// An interval `[π, σ]` is a product of partition lattices, one per block of
/// `σ`, so `μ(π, σ) = ∏ (-1)^(m-1) (m-1)!` with `m` the number of blocks of
/// `π` inside each block of `σ`.
pub fn mobius(pi: &Partition, sigma: &Partition) -> Result<i64> {
    if !pi.leq(sigma)? {
        return Ok(0);
    }
    let mut inside = vec![Vec::<u8>::new(); sigma.num_blocks()];
    for (&a, &b) in pi.labels().iter().zip(sigma.labels()) {
        let list = &mut inside[b as usize];
        if !list.contains(&a) {
            list.push(a);
        }
    }
    Ok(inside
        .iter()
        .map(|blocks| {
            let m = blocks.len() as i64;
            let fact: i64 = (1..m).product();
            if m % 2 == 1 { fact } else { -fact }
        })
        .product())
}

type Key = (Partition, Partition);

/// Möbius function from its defining recurrence over `P(n)`, memoized.
/// Slow by design: it is the reference the closed form is checked against.
pub fn mobius_recurrence(pi: &Partition, sigma: &Partition) -> Result<i64> {
    static CACHE: OnceLock<Mutex<HashMap<Key, i64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let pi = pi.uncolored();
    let sigma = sigma.uncolored();
    if !pi.leq(&sigma)? {
        return Ok(0);
    }
    if pi == sigma {
        return Ok(1);
    }
    let key = (pi.clone(), sigma.clone());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return Ok(v);
    }
    let universe = enumerate(pi.lower(), ClassFilter::All)?;
    let mut total = 0i64;
    for tau in universe.iter().filter(|t| pi.refines_unchecked(t) && t.refines_unchecked(&sigma) && **t != sigma) {
        total += mobius_recurrence(&pi, tau)?;
    }
    let v = -total;
    cache.lock().unwrap().insert(key, v);
    Ok(v)
}

/// Möbius engine on an explicit finite poset of partitions ordered by refinement.
pub struct PosetMobius {
    elems: Vec<Partition>,
}

impl PosetMobius {
    pub fn new(elems: Vec<Partition>) -> Self {
        PosetMobius { elems }
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elems
    }

    /// `μ(x, top)` for every element `x`, by `μ(x, top) = -Σ_{x < z ≤ top} μ(z, top)`.
    pub fn to_top(&self, top: usize) -> Vec<i64> {
        let n = self.elems.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.elems[i].num_blocks());
        let mut mu = vec![0i64; n];
        let mut done = vec![false; n];
        let t = &self.elems[top];
        for &x in &order {
            let ex = &self.elems[x];
            if !ex.refines_unchecked(t) {
                done[x] = true;
                continue;
            }
            if x == top {
                mu[x] = 1;
            } else {
                let mut s = 0i64;
                for z in 0..n {
                    if z != x && done[z] && mu[z] != 0 && ex.refines_unchecked(&self.elems[z]) {
                        s += mu[z];
                    }
                }
                mu[x] = -s;
            }
            done[x] = true;
        }
        mu
    }

    /// Full matrix `μ(x, y)`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.elems.len();
        let cols: Vec<Vec<i64>> = (0..n).map(|y| self.to_top(y)).collect();
        (0..n).map(|x| (0..n).map(|y| cols[y][x]).collect()).collect()
    }
}
