//! Layers of `Z'_{p^k}` by p-adic valuation, and the block partitions that
//! the invariance conditions impose on them.

use crate::arith::{mul_mod, odd_prime_power};
use crate::error::{Error, Result};
use crate::groupaction::{units, BlockSystem};

/// `Y_i = { x in Z'_n : p^i | x, p^(i+1) does not }` for `i < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    p: u64,
    k: u32,
    layers: Vec<Vec<u64>>,
}

impl LayerDecomposition {
    pub fn new(n: u64) -> Result<Self> {
        let (p, k) = odd_prime_power(n).ok_or(Error::NotPrimePower(n))?;
        let mut layers = vec![Vec::new(); k as usize];
        for x in 1..n {
            layers[valuation(x, p) as usize].push(x);
        }
        Ok(Self { p, k, layers })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn layer(&self, i: u32) -> Result<&[u64]> {
        self.layers
            .get(i as usize)
            .map(Vec::as_slice)
            .ok_or(Error::BadIndex {
                modulus: self.modulus(),
                index: i,
            })
    }

    pub fn layers(&self) -> &[Vec<u64>] {
        &self.layers
    }

    /// The layer as singleton blocks.
    pub fn singleton_blocks(&self, i: u32) -> Result<BlockSystem> {
        BlockSystem::singletons(self.modulus(), self.layer(i)?.iter().copied())
    }
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

pub fn layer(n: u64, i: u32) -> Result<Vec<u64>> {
    Ok(LayerDecomposition::new(n)?.layer(i)?.to_vec())
}

/// Multiplier of the invariance condition keyed `(i, j)`: `1 + p^(k-i-j-1)`.
pub fn invariance_multiplier(p: u64, k: u32, i: u32, j: u32) -> Result<u64> {
    if i + j + 1 >= k {
        return Err(Error::BadIndex {
            modulus: p.pow(k),
            index: i,
        });
    }
    Ok(1 + p.pow(k - i - j - 1))
}

/// Orbits of `x -> s x` on layer `Y_i`.
pub fn invariance_blocks(n: u64, i: u32, s: u64) -> Result<BlockSystem> {
    let layer = layer(n, i)?;
    if !units(n).contains(s) {
        return Err(Error::Unsupported(format!("{s} is not a unit mod {n}")));
    }
    let mut seen = vec![false; n as usize];
    let mut blocks = Vec::new();
    for &x in &layer {
        if seen[x as usize] {
            continue;
        }
        let mut block = Vec::new();
        let mut y = x;
        while !seen[y as usize] {
            seen[y as usize] = true;
            block.push(y);
            y = mul_mod(s, y, n);
        }
        if block.iter().any(|y| !layer.contains(y)) {
            return Err(Error::InvalidBlocks(format!(
                "layer {i} not invariant under {s}"
            )));
        }
        blocks.push(block);
    }
    BlockSystem::new(n, blocks)
}

/// Merges blocks so that `x` and `n - x` always share a block.
pub fn symmetrize(sys: &BlockSystem) -> Result<BlockSystem> {
    let n = sys.modulus();
    let blocks = sys.blocks();
    let mut owner = vec![usize::MAX; n as usize];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            if (2 * x) % n == 0 {
                return Err(Error::SelfInverse(x));
            }
            owner[x as usize] = i;
        }
    }
    let mut parent: Vec<usize> = (0..blocks.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            let j = owner[(n - x) as usize];
            if j == usize::MAX {
                return Err(Error::InvalidBlocks(format!(
                    "{} (negative of {x}) is not covered",
                    n - x
                )));
            }
            let (a, c) = (find(&mut parent, i), find(&mut parent, j));
            if a != c {
                parent[a.max(c)] = a.min(c);
            }
        }
    }
    let mut merged: Vec<Vec<u64>> = vec![Vec::new(); blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        let r = find(&mut parent, i);
        merged[r].extend_from_slice(b);
    }
    BlockSystem::new(n, merged.into_iter().filter(|b| !b.is_empty()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks_of(sys: &BlockSystem) -> Vec<Vec<u64>> {
        sys.blocks().to_vec()
    }

    #[test]
    fn layer_examples() {
        assert_eq!(layer(27, 2).unwrap(), vec![9, 18]);
        assert_eq!(layer(27, 1).unwrap(), vec![3, 6, 12, 15, 21, 24]);
        assert_eq!(layer(9, 0).unwrap(), vec![1, 2, 4, 5, 7, 8]);
        assert!(matches!(layer(27, 3), Err(Error::BadIndex { .. })));
        assert!(layer(12, 0).is_err());
    }

    #[test]
    fn invariance_multipliers_are_computed() {
        assert_eq!(invariance_multiplier(3, 3, 0, 0).unwrap(), 10);
        assert_eq!(invariance_multiplier(3, 3, 0, 1).unwrap(), 4);
        assert_eq!(invariance_multiplier(3, 3, 1, 0).unwrap(), 4);
        assert_eq!(invariance_multiplier(5, 3, 0, 0).unwrap(), 26);
        assert_eq!(invariance_multiplier(5, 3, 0, 1).unwrap(), 6);
        assert!(invariance_multiplier(3, 3, 1, 1).is_err());
    }

    #[test]
    fn starred_partitions_for_27() {
        let y0s = invariance_blocks(27, 0, 10).unwrap();
        assert_eq!(
            blocks_of(&y0s),
            vec![
                vec![1, 10, 19],
                vec![2, 11, 20],
                vec![4, 13, 22],
                vec![5, 14, 23],
                vec![7, 16, 25],
                vec![8, 17, 26]
            ]
        );
        let y0ss = invariance_blocks(27, 0, 4).unwrap();
        assert_eq!(
            blocks_of(&y0ss),
            vec![
                vec![1, 4, 7, 10, 13, 16, 19, 22, 25],
                vec![2, 5, 8, 11, 14, 17, 20, 23, 26]
            ]
        );
        let y1s = invariance_blocks(27, 1, 4).unwrap();
        assert_eq!(blocks_of(&y1s), vec![vec![3, 12, 21], vec![6, 15, 24]]);
    }

    #[test]
    fn symmetrize_examples() {
        let z9 = BlockSystem::singletons(9, 1..9).unwrap();
        assert_eq!(
            blocks_of(&symmetrize(&z9).unwrap()),
            vec![vec![1, 8], vec![2, 7], vec![3, 6], vec![4, 5]]
        );
        let y0s = invariance_blocks(9, 0, 4).unwrap();
        assert_eq!(
            blocks_of(&symmetrize(&y0s).unwrap()),
            vec![vec![1, 2, 4, 5, 7, 8]]
        );
        let y2 = BlockSystem::singletons(27, [9, 18]).unwrap();
        assert_eq!(blocks_of(&symmetrize(&y2).unwrap()), vec![vec![9, 18]]);
    }

    #[test]
    fn symmetrize_needs_negatives() {
        let half = BlockSystem::singletons(9, [1, 2]).unwrap();
        assert!(symmetrize(&half).is_err());
    }

    #[test]
    fn layers_partition_and_sizes() {
        for (p, k) in [(3u64, 1u32), (3, 2), (3, 3), (5, 2), (5, 3), (7, 3)] {
            let n = p.pow(k);
            let d = LayerDecomposition::new(n).unwrap();
            let mut all: Vec<u64> = d.layers().iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (1..n).collect::<Vec<_>>());
            for i in 0..k {
                assert_eq!(d.layer(i).unwrap().len() as u64, p.pow(k - i - 1) * (p - 1));
            }
        }
    }
}
