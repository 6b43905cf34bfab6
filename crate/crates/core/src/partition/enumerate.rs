use super::{ColoredWord, Partition, MAX_POINTS};
use crate::error::{Error, Result};

/// Block-structure classes that the enumerator understands directly.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum ClassFilter {
    All,
    Noncrossing,
    Pairings,
    NoncrossingPairings,
    EvenBlocks,
    NoncrossingEven,
    SingletonsAndPairings,
    NoncrossingSingletonsAndPairings,
}

impl ClassFilter {
    pub fn generator(self) -> Generator {
        use ClassFilter::*;
        let noncrossing = matches!(self, Noncrossing | NoncrossingPairings | NoncrossingEven | NoncrossingSingletonsAndPairings);
        let max_block = match self {
            Pairings | NoncrossingPairings | SingletonsAndPairings | NoncrossingSingletonsAndPairings => 2,
            _ => usize::MAX,
        };
        let even = matches!(self, Pairings | NoncrossingPairings | EvenBlocks | NoncrossingEven);
        Generator { noncrossing, max_block, even }
    }

    pub fn accepts(self, p: &Partition) -> bool {
        let g = self.generator();
        (!g.noncrossing || p.is_noncrossing())
            && p.max_block() <= g.max_block
            && (!g.even || p.has_even_blocks())
    }
}

/// Restricted-growth-string generator with pruning. Noncrossing strings are
/// built directly with a set of closed blocks, so `NC(k)` never touches `P(k)`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub noncrossing: bool,
    pub max_block: usize,
    pub even: bool,
}

struct State {
    labels: Vec<u8>,
    sizes: Vec<usize>,
    last: Vec<usize>,
    closed: Vec<bool>,
}

impl Generator {
    /// Visit every admissible label sequence of length `n` in lexicographic
    /// order of the labels (not the canonical partition order).
    pub fn for_each(&self, n: usize, mut visit: impl FnMut(&[u8])) {
        let mut st = State { labels: Vec::with_capacity(n), sizes: Vec::new(), last: Vec::new(), closed: Vec::new() };
        self.recurse(n, &mut st, &mut visit);
    }

    fn recurse(&self, n: usize, st: &mut State, visit: &mut impl FnMut(&[u8])) {
        let i = st.labels.len();
        if i == n {
            if !self.even || st.sizes.iter().all(|s| s % 2 == 0) {
                visit(&st.labels);
            }
            return;
        }
        let remaining = n - i;
        if self.even {
            let odd = st.sizes.iter().filter(|s| *s % 2 == 1).count();
            if odd > remaining {
                return;
            }
        }
        for b in 0..=st.sizes.len() {
            let fresh = b == st.sizes.len();
            if !fresh && (st.sizes[b] >= self.max_block || (self.noncrossing && st.closed[b])) {
                continue;
            }
            let mut closed_now = Vec::new();
            if fresh {
                st.sizes.push(1);
                st.last.push(i);
                st.closed.push(false);
            } else {
                if self.noncrossing {
                    let lb = st.last[b];
                    for c in 0..st.sizes.len() {
                        if c != b && st.last[c] > lb && !st.closed[c] {
                            st.closed[c] = true;
                            closed_now.push(c);
                        }
                    }
                }
                st.sizes[b] += 1;
            }
            let prev_last = if fresh { i } else { std::mem::replace(&mut st.last[b], i) };
            st.labels.push(b as u8);
            self.recurse(n, st, visit);
            st.labels.pop();
            if fresh {
                st.sizes.pop();
                st.last.pop();
                st.closed.pop();
            } else {
                st.sizes[b] -= 1;
                st.last[b] = prev_last;
                for c in closed_now {
                    st.closed[c] = false;
                }
            }
        }
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::Capacity(format!("{n} points exceeds the enumeration bound {MAX_POINTS}")));
    }
    Ok(())
}

/// All one-row partitions of `points` in the class, in canonical order.
pub fn enumerate(points: &ColoredWord, filter: ClassFilter) -> Result<Vec<Partition>> {
    check_bound(points.len())?;
    let mut out = Vec::new();
    filter.generator().for_each(points.len(), |labels| {
        out.push(Partition { upper: ColoredWord::empty(), lower: points.clone(), labels: labels.to_vec() });
    });
    out.sort_by_cached_key(|p| p.block_indices());
    Ok(out)
}

/// All partitions in `P(k, l)` with the given words whose rotated one-row
/// form lies in the class. Ordered canonically in the global leg order.
pub fn enumerate_two_row(upper: &ColoredWord, lower: &ColoredWord, filter: ClassFilter) -> Result<Vec<Partition>> {
    let (k, l) = (upper.len(), lower.len());
    check_bound(k + l)?;
    let mut out = Vec::new();
    filter.generator().for_each(k + l, |rot| {
        // rot lists lower 0..l then upper k-1..0
        let mut raw = vec![0usize; k + l];
        for (j, &b) in rot[..l].iter().enumerate() {
            raw[k + j] = b as usize;
        }
        for (t, &b) in rot[l..].iter().enumerate() {
            raw[k - 1 - t] = b as usize;
        }
        out.push(Partition::from_labels(upper.clone(), lower.clone(), &raw).expect("lengths agree"));
    });
    out.sort_by_cached_key(|p| p.block_indices());
    Ok(out)
}

/// Number of class members on `k` points with exactly `b` blocks.
pub fn count_by_blocks(k: usize, b: usize, filter: ClassFilter) -> Result<u64> {
    check_bound(k)?;
    let mut count = 0u64;
    filter.generator().for_each(k, |labels| {
        let blocks = labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
        if blocks == b {
            count += 1;
        }
    });
    Ok(count)
}
