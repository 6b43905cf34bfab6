//! Young diagrams and standard tableaux counts.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::numbers::factorial;
use crate::error::{Error, Result};

/// Weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{rows:?} is not a Young diagram")));
        }
        Ok(YoungDiagram(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Cells `(i, j)`, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Every row length doubled.
    pub fn doubled(&self) -> YoungDiagram {
        YoungDiagram(self.0.iter().map(|r| 2 * r).collect())
    }

    fn column_length(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&r| r >= j).count()
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i - 1] - j;
        let leg = self.column_length(j) - i;
        arm + leg + 1
    }
}

/// All diagrams with `n` boxes, rows in decreasing lexicographic order.
pub fn diagrams(n: usize) -> Vec<YoungDiagram> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if left == 0 {
            out.push(YoungDiagram(cur.clone()));
            return;
        }
        for r in (1..=left.min(cap)).rev() {
            cur.push(r);
            rec(left - r, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `f^λ` by the hook length formula.
pub fn standard_tableaux_count(lambda: &YoungDiagram) -> Result<BigInt> {
    if lambda.size() > 20 {
        return Err(Error::Capacity(format!("{} boxes", lambda.size())));
    }
    let hooks = lambda.cells().fold(BigInt::one(), |acc, (i, j)| acc * lambda.hook(i, j));
    Ok(factorial(lambda.size() as u64) / hooks)
}

/// `f^λ` by counting removals of corner boxes.
pub fn standard_tableaux_brute(lambda: &YoungDiagram) -> u64 {
    fn rec(rows: &mut Vec<usize>) -> u64 {
        if rows.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..rows.len() {
            let corner = i + 1 == rows.len() || rows[i + 1] < rows[i];
            if !corner {
                continue;
            }
            rows[i] -= 1;
            let popped = rows[i] == 0;
            if popped {
                rows.pop();
            }
            total += rec(rows);
            if popped {
                rows.push(0);
            }
            rows[i] += 1;
        }
        total
    }
    rec(&mut lambda.0.clone())
}
