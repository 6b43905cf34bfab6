use super::{ColoredWord, Partition, UnionFind};
use crate::error::{Error, Result};

/// Double every leg: point `i` becomes `2i, 2i+1`, and a block
/// `b_1 < … < b_m` becomes the pairs `(2b_j+1, 2b_{j+1})` plus the outer
/// pair `(2b_1, 2b_m+1)`.
pub fn fatten(pi: &Partition) -> Result<Partition> {
    if !pi.is_one_row() {
        return Err(Error::Domain("fattening needs a one-row partition".into()));
    }
    if !pi.is_noncrossing() {
        return Err(Error::Domain(format!("{pi} is crossing")));
    }
    let k = pi.l();
    let mut raw = vec![0usize; 2 * k];
    let mut tag = 0;
    for block in pi.blocks() {
        let pts: Vec<usize> = block.iter().map(|l| l.pos).collect();
        for w in pts.windows(2) {
            raw[2 * w[0] + 1] = tag;
            raw[2 * w[1]] = tag;
            tag += 1;
        }
        raw[2 * pts[0]] = tag;
        raw[2 * pts[pts.len() - 1] + 1] = tag;
        tag += 1;
    }
    Partition::one_row(ColoredWord::plain(2 * k), &raw)
}

/// Collapse each pair of neighbours `2i, 2i+1` back to a point and take
/// connected components.
pub fn shrink(sigma: &Partition) -> Result<Partition> {
    if !sigma.is_one_row() || sigma.l() % 2 != 0 {
        return Err(Error::Domain("shrinking needs a one-row partition on an even number of points".into()));
    }
    if !sigma.is_pairing() || !sigma.is_noncrossing() {
        return Err(Error::Domain(format!("{sigma} is not a noncrossing pairing")));
    }
    let k = sigma.l() / 2;
    let mut uf = UnionFind::new(k);
    for block in sigma.blocks() {
        uf.union(block[0].pos / 2, block[1].pos / 2);
    }
    let raw: Vec<usize> = (0..k).map(|i| uf.find(i)).collect();
    Partition::one_row(ColoredWord::plain(k), &raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate, ClassFilter};
    use std::collections::HashSet;

    #[test]
    fn single_point() {
        let one = Partition::from_blocks_1based(1, &[&[1]]).unwrap();
        assert_eq!(fatten(&one).unwrap(), Partition::from_blocks_1based(2, &[&[1, 2]]).unwrap());
    }

    #[test]
    fn eight_point_picture() {
        let pi = Partition::from_blocks_1based(8, &[&[1, 5, 8], &[2, 3, 4], &[6, 7]]).unwrap();
        let expected = Partition::from_blocks_1based(
            16,
            &[&[1, 16], &[2, 9], &[10, 15], &[3, 8], &[4, 5], &[6, 7], &[11, 14], &[12, 13]],
        )
        .unwrap();
        assert_eq!(fatten(&pi).unwrap(), expected);
        assert_eq!(shrink(&expected).unwrap(), pi);
    }

    #[test]
    fn bijective_on_small_sizes() {
        for k in 1..=6 {
            let nc = enumerate(&ColoredWord::plain(k), ClassFilter::Noncrossing).unwrap();
            let images: HashSet<Partition> = nc.iter().map(|p| fatten(p).unwrap()).collect();
            assert_eq!(images.len(), nc.len());
            let nc2 = enumerate(&ColoredWord::plain(2 * k), ClassFilter::NoncrossingPairings).unwrap();
            assert_eq!(nc2.len(), nc.len());
            for s in &nc2 {
                assert!(images.contains(s));
                assert_eq!(fatten(&shrink(s).unwrap()).unwrap(), *s);
            }
        }
    }

    #[test]
    fn rejects_crossing() {
        let cross = Partition::from_blocks_1based(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert!(matches!(fatten(&cross), Err(Error::Domain(_))));
    }
}
