//! Independent checks for the enumeration engine.
//!
//! * [`brute_iso_classes`]: canonical adjacency matrices over all relabelings.
//! * [`criterion_orbit_count`]: union-find over every connecting set, joining
//!   sets related by layer-wise multipliers that satisfy the congruences
//!   forced by the non-invariance conditions of the set.
//! * [`appendix_a_check`]: closed cycle-index forms of `A_1` and `A_22` for
//!   order `p^2`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, is_odd_prime, mul_mod, phi};
use crate::error::{Error, Result};
use crate::groupaction::units;
use crate::layers::LayerDecomposition;
use crate::multiplier::{enumerate_p2, Mode};
use crate::polyring::{CyclicPolynomial, Polynomial};

/// A connecting set stored as a bitmask: bit `x - 1` for residue `x` when
/// directed, bit `i` for the pair `{i + 1, n - i - 1}` when undirected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConnectingSetMask {
    pub n: u64,
    pub mode: Mode,
    pub bits: u64,
}

impl ConnectingSetMask {
    pub fn width(n: u64, mode: Mode) -> u32 {
        match mode {
            Mode::Directed => (n - 1) as u32,
            Mode::Undirected => (n / 2) as u32,
        }
    }

    pub fn from_set(n: u64, mode: Mode, set: &[u64]) -> Result<Self> {
        let mut bits = 0u64;
        for &x in set {
            if x == 0 || x >= n {
                return Err(Error::InvalidBlocks(format!("{x} is not in Z'_{n}")));
            }
            match mode {
                Mode::Directed => bits |= 1 << (x - 1),
                Mode::Undirected => bits |= 1 << (x.min(n - x) - 1),
            }
        }
        let m = Self { n, mode, bits };
        if mode == Mode::Undirected && m.to_set() != sorted(set) {
            return Err(Error::InvalidBlocks(
                "undirected set must satisfy X = -X".into(),
            ));
        }
        Ok(m)
    }

    pub fn to_set(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for b in 0..Self::width(self.n, self.mode) {
            if self.bits >> b & 1 == 1 {
                let x = b as u64 + 1;
                out.push(x);
                if self.mode == Mode::Undirected && self.n - x != x {
                    out.push(self.n - x);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn valency(&self) -> u32 {
        self.to_set().len() as u32
    }
}

fn sorted(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Lexicographically least adjacency matrix (row-major bits) over all
/// relabelings of the circulant `Cay(Z_n, X)`. Translations are
/// automorphisms, so relabelings fixing 0 already reach the minimum.
pub fn canonical_form(n: usize, set: &[u64]) -> Result<u128> {
    if n > 11 {
        return Err(Error::TooLarge(format!("canonical form on {n} vertices")));
    }
    let mut inset = vec![false; n];
    for &x in set {
        inset[x as usize % n] = true;
    }
    let adj = |a: usize, b: usize| inset[(b + n - a) % n];
    let mut best = u128::MAX;
    let mut sigma: Vec<usize> = (0..n).collect();
    loop {
        let mut code = 0u128;
        'rows: for i in 0..n {
            for j in 0..n {
                code = code << 1 | adj(sigma[i], sigma[j]) as u128;
            }
            // Prune once the prefix already exceeds the best code.
            let shift = ((n - 1 - i) * n) as u32;
            if best != u128::MAX && (code << shift) > best {
                code = u128::MAX;
                break 'rows;
            }
        }
        best = best.min(code);
        if !next_perm(&mut sigma[1..]) {
            break;
        }
    }
    Ok(best)
}

fn next_perm(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Isomorphism classes of circulants on `n <= 9` vertices, by valency.
pub fn brute_iso_classes(n: u64, mode: Mode) -> Result<Polynomial> {
    if n > 9 {
        return Err(Error::TooLarge(format!(
            "brute force is limited to n <= 9 (got {n})"
        )));
    }
    if n < 2 {
        return Ok(Polynomial::one());
    }
    let width = ConnectingSetMask::width(n, mode);
    let forms: HashSet<(u32, u128)> = (0..1u64 << width)
        .into_par_iter()
        .map(|bits| {
            let set = ConnectingSetMask { n, mode, bits }.to_set();
            let code = canonical_form(n as usize, &set).expect("n <= 9");
            (set.len() as u32, code)
        })
        .collect();
    let mut by_valency: BTreeMap<u32, u64> = BTreeMap::new();
    for (v, _) in forms {
        *by_valency.entry(v).or_default() += 1;
    }
    Ok(Polynomial::from_terms(by_valency))
}

/// Disjoint-set forest over `0..len` with path halving and union by index.
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    pub fn is_root(&self, x: u32) -> bool {
        self.parent[x as usize] == x
    }
}

/// Bit permutation applied to masks through per-byte lookup tables.
struct MaskMap {
    tables: Vec<[u64; 256]>,
}

impl MaskMap {
    fn new(width: u32, image_of_bit: impl Fn(u32) -> u32) -> Self {
        let chunks = width.div_ceil(8) as usize;
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for (byte, slot) in table.iter_mut().enumerate() {
                let mut out = 0u64;
                for b in 0..8 {
                    let bit = (c * 8 + b) as u32;
                    if byte >> b & 1 == 1 && bit < width {
                        out |= 1 << image_of_bit(bit);
                    }
                }
                *slot = out;
            }
        }
        Self { tables }
    }

    #[inline]
    fn apply(&self, mask: u64) -> u64 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (c, t)| acc | t[(mask >> (8 * c) & 0xff) as usize])
    }
}

/// Geometry of `Z'_{p^k}` masks: bit positions, layers and multiplier maps.
struct MaskSpace {
    n: u64,
    p: u64,
    k: u32,
    mode: Mode,
    width: u32,
    layer_masks: Vec<u64>,
    /// Residue represented by each bit.
    residues: Vec<u64>,
}

impl MaskSpace {
    fn new(p: u64, k: u32, mode: Mode) -> Result<Self> {
        let n = p.pow(k);
        let width = ConnectingSetMask::width(n, mode);
        let layers = LayerDecomposition::new(n)?;
        let residues: Vec<u64> = (1..=width as u64).collect();
        let mut layer_masks = vec![0u64; k as usize];
        for (b, &x) in residues.iter().enumerate() {
            let i = (0..k)
                .find(|&i| layers.layer(i).unwrap().contains(&x))
                .unwrap();
            layer_masks[i as usize] |= 1 << b;
        }
        Ok(Self {
            n,
            p,
            k,
            mode,
            width,
            layer_masks,
            residues,
        })
    }

    fn bit_of(&self, x: u64) -> u32 {
        let x = x % self.n;
        match self.mode {
            Mode::Directed => (x - 1) as u32,
            Mode::Undirected => (x.min(self.n - x) - 1) as u32,
        }
    }

    /// Map multiplying layer `i` by `m[i]`.
    fn multiplier_map(&self, m: &[u64]) -> MaskMap {
        let layer_of: Vec<usize> = (0..self.width)
            .map(|b| {
                (0..self.k as usize)
                    .find(|&i| self.layer_masks[i] >> b & 1 == 1)
                    .unwrap()
            })
            .collect();
        MaskMap::new(self.width, |b| {
            let x = self.residues[b as usize];
            self.bit_of(mul_mod(m[layer_of[b as usize]], x, self.n))
        })
    }

    /// Non-invariance conditions `R_ij` as `(i, multiplier)` pairs, in the
    /// order `R_00, R_01, R_10` for `k = 3` and `R_00` for `k = 2`.
    fn conditions(&self) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for i in 0..self.k.saturating_sub(1) {
            for j in 0..self.k - 1 - i {
                out.push((i as usize, 1 + self.p.pow(self.k - i - j - 1)));
            }
        }
        out
    }
}

/// Admissible multiplier tuples, reduced to `m_i mod p^(k-i)`, for a given
/// set of non-invariance conditions (indexed as in [`MaskSpace::conditions`]).
fn admissible_tuples(p: u64, k: u32, regime: &[bool]) -> Vec<Vec<u64>> {
    let moduli: Vec<u64> = (0..k).map(|i| p.pow(k - i)).collect();
    // Congruences m_{a+1} = m_a (mod p^e) triggered by each R_ij.
    let mut constraints: Vec<(usize, u32)> = Vec::new();
    let mut idx = 0;
    for i in 0..k.saturating_sub(1) {
        for j in 0..k - 1 - i {
            if regime[idx] {
                for step in 0..(k - j - 1 - i) {
                    constraints.push(((i + step) as usize, k - i - j - 1 - step));
                }
            }
            idx += 1;
        }
    }
    let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
    for &m in &moduli {
        let unit = units(m);
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                unit.elements().iter().map(move |&u| {
                    let mut t = t.clone();
                    t.push(u);
                    t
                })
            })
            .filter(|t| {
                constraints.iter().all(|&(a, e)| {
                    a + 1 >= t.len() || {
                        let q = p.pow(e);
                        t[a + 1] % q == t[a] % q
                    }
                })
            })
            .collect();
    }
    tuples
}

/// Greedy generating set of the tuple group `elements`.
fn generating_set(elements: &[Vec<u64>], moduli: &[u64]) -> Vec<Vec<u64>> {
    let identity: Vec<u64> = vec![1; moduli.len()];
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(moduli)
            .map(|((&x, &y), &m)| mul_mod(x, y, m))
            .collect()
    };
    let mut closure: HashSet<Vec<u64>> = HashSet::from([identity]);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let mut frontier: Vec<Vec<u64>> = closure.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = mul(&x, g);
                if closure.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    debug_assert_eq!(closure.len(), elements.len());
    gens
}

/// Largest mask width handled without `long_run`.
pub const DEFAULT_MAX_BITS: u32 = 24;
/// Largest mask width handled at all (directed order 27).
pub const LONG_RUN_MAX_BITS: u32 = 26;

/// Orbit counts, by valency, of connecting sets of `Z'_{p^k}` under the
/// layer-multiplier isomorphism criterion. `progress` receives
/// `(masks done, masks total)` periodically.
pub fn criterion_orbit_count_with_progress(
    p: u64,
    k: u32,
    mode: Mode,
    long_run: bool,
    progress: &mut dyn FnMut(u64, u64),
) -> Result<Polynomial> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if !(2..=3).contains(&k) {
        return Err(Error::Unsupported(format!(
            "criterion oracle needs k in 2..=3 (got {k})"
        )));
    }
    let space = MaskSpace::new(p, k, mode)?;
    let width = space.width;
    let limit = if long_run {
        LONG_RUN_MAX_BITS
    } else {
        DEFAULT_MAX_BITS
    };
    if width > limit {
        return Err(Error::TooLarge(format!(
            "2^{width} connecting sets (limit 2^{limit}{})",
            if long_run { "" } else { "; long_run raises it" }
        )));
    }
    let conditions = space.conditions();
    let cond_maps: Vec<(u64, MaskMap)> = conditions
        .iter()
        .map(|&(i, s)| {
            let mut m = vec![1u64; k as usize];
            m[i] = s;
            (space.layer_masks[i], space.multiplier_map(&m))
        })
        .collect();
    let regime_of = |mask: u64| -> usize {
        cond_maps
            .iter()
            .enumerate()
            .filter(|(_, (layer, map))| map.apply(mask & layer) != mask & layer)
            .fold(0, |acc, (c, _)| acc | 1 << c)
    };
    let moduli: Vec<u64> = (0..k).map(|i| p.pow(k - i)).collect();
    let regime_gens: Vec<Vec<MaskMap>> = (0..1usize << conditions.len())
        .map(|r| {
            let flags: Vec<bool> = (0..conditions.len()).map(|c| r >> c & 1 == 1).collect();
            let tuples = admissible_tuples(p, k, &flags);
            generating_set(&tuples, &moduli)
                .iter()
                .map(|g| space.multiplier_map(g))
                .collect()
        })
        .collect();

    let total = 1u64 << width;
    let mut uf = UnionFind::new(total as usize);
    let step = (total / 64).max(1);
    for mask in 0..total {
        let r = regime_of(mask);
        for g in &regime_gens[r] {
            let image = g.apply(mask);
            if regime_of(image) != r {
                return Err(Error::InvariantViolated(format!(
                    "mask {mask:#x} and its image {image:#x} differ in non-invariance conditions"
                )));
            }
            uf.union(mask as u32, image as u32);
        }
        if mask % step == step - 1 {
            progress(mask + 1, total);
        }
    }
    let mut by_valency: BTreeMap<u32, u64> = BTreeMap::new();
    let weight = match mode {
        Mode::Directed => 1,
        Mode::Undirected => 2,
    };
    for mask in 0..total {
        if uf.is_root(mask as u32) {
            *by_valency.entry(weight * mask.count_ones()).or_default() += 1;
        }
    }
    Ok(Polynomial::from_terms(by_valency))
}

pub fn criterion_orbit_count(p: u64, k: u32, mode: Mode, long_run: bool) -> Result<Polynomial> {
    criterion_orbit_count_with_progress(p, k, mode, long_run, &mut |_, _| {})
}

/// `I_m` evaluated at `x_r = 1 + t^(w r)` (or at `x_r y_r` with `y_r = 1 + t^(w p r)`
/// when `diagonal`), divided exactly by `m`.
fn cyclic_index(m: u64, w: u32, p: u32, diagonal: bool) -> Result<Polynomial> {
    let mut sum = Polynomial::zero();
    for r in divisors(m) {
        let x = Polynomial::one_plus_power(w * r as u32);
        let base = if diagonal {
            &x * &Polynomial::one_plus_power(w * p * r as u32)
        } else {
            x
        };
        sum += &base.pow((m / r) as u32).scale(&BigInt::from(phi(r)));
    }
    sum.div_exact(&BigInt::from(m))
        .ok_or(Error::NonIntegralCount {
            group_order: m as usize,
        })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixAReport {
    pub p: u64,
    pub mode: Mode,
    pub a1: Polynomial,
    pub a22: Polynomial,
    /// `A_1(t) = A_1(t^p) mod t^(p^2-1) - 1`.
    pub a1_congruence: bool,
    /// `A_22(t) = A_22(t^p) mod t^(p^2-1) - 1`.
    pub a22_congruence: bool,
    /// Closed forms equal the engine's `A_1` and `A_22`.
    pub matches_engine: bool,
}

impl AppendixAReport {
    pub fn all_hold(&self) -> bool {
        self.a1_congruence && self.a22_congruence && self.matches_engine
    }
}

/// Closed cycle-index forms of `A_1` and `A_22` for order `p^2`.
pub fn appendix_a_closed_forms(p: u64, mode: Mode) -> Result<(Polynomial, Polynomial)> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let (m, w) = match mode {
        Mode::Directed => (p - 1, 1),
        Mode::Undirected => ((p - 1) / 2, 2),
    };
    let pu = p as u32;
    let x = cyclic_index(m, w, pu, false)?;
    let y = cyclic_index(m, w * pu, pu, false)?;
    Ok((&x * &y, cyclic_index(m, w, pu, true)?))
}

pub fn appendix_a_check(p: u64, mode: Mode) -> Result<AppendixAReport> {
    let (a1, a22) = appendix_a_closed_forms(p, mode)?;
    let modulus = (p * p - 1) as u32;
    let cong = |f: &Polynomial| -> bool {
        let lhs: CyclicPolynomial = f.cyclic_reduce(modulus);
        lhs == f.substitute_power(p as u32).cyclic_reduce(modulus)
    };
    let engine = enumerate_p2(p, mode)?;
    let matches_engine = engine.get("A_1") == Some(&a1) && engine.get("A_22") == Some(&a22);
    Ok(AppendixAReport {
        p,
        mode,
        a1_congruence: cong(&a1),
        a22_congruence: cong(&a22),
        a1,
        a22,
        matches_engine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_round_trip() {
        let m = ConnectingSetMask::from_set(9, Mode::Undirected, &[1, 8, 3, 6]).unwrap();
        assert_eq!(m.bits, 0b101);
        assert_eq!(m.to_set(), vec![1, 3, 6, 8]);
        assert_eq!(m.valency(), 4);
        assert!(ConnectingSetMask::from_set(9, Mode::Undirected, &[1]).is_err());
        let d = ConnectingSetMask::from_set(9, Mode::Directed, &[1, 8]).unwrap();
        assert_eq!(d.bits, 0b1000_0001);
    }

    #[test]
    fn non_equivalent_isomorphic_pair_on_8_vertices() {
        let a = canonical_form(8, &[1, 2, 5]).unwrap();
        let b = canonical_form(8, &[1, 5, 6]).unwrap();
        assert_eq!(a, b);
        // No unit of Z_8 maps {1,2,5} onto {1,5,6}.
        for m in [1u64, 3, 5, 7] {
            let mut img: Vec<u64> = [1u64, 2, 5].iter().map(|x| x * m % 8).collect();
            img.sort_unstable();
            assert_ne!(img, vec![1, 5, 6]);
        }
        assert_ne!(a, canonical_form(8, &[1, 2, 3]).unwrap());
    }

    #[test]
    fn brute_small_orders() {
        assert_eq!(
            brute_iso_classes(3, Mode::Undirected).unwrap(),
            "1+t^2".parse().unwrap()
        );
        assert_eq!(
            brute_iso_classes(5, Mode::Undirected)
                .unwrap()
                .evaluate_i64(1),
            BigInt::from(3)
        );
        assert!(matches!(
            brute_iso_classes(10, Mode::Directed),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn brute_order_9_matches_engine() {
        for mode in Mode::ALL {
            let brute = brute_iso_classes(9, mode).unwrap();
            assert_eq!(brute, enumerate_p2(3, mode).unwrap().combined, "{mode}");
        }
    }

    #[test]
    fn admissible_tuple_counts() {
        // No conditions: full product Z*_27 x Z*_9 x Z*_3.
        assert_eq!(
            admissible_tuples(3, 3, &[false, false, false]).len(),
            18 * 6 * 2
        );
        // R_00 forces m1 = m0 mod 9 and m2 = m1 mod 3.
        assert_eq!(admissible_tuples(3, 3, &[true, false, false]).len(), 18);
        // R_01 alone: m1 = m0 mod 3.
        assert_eq!(
            admissible_tuples(3, 3, &[false, true, false]).len(),
            18 * 3 * 2
        );
        // R_10 alone: m2 = m1 mod 3.
        assert_eq!(admissible_tuples(3, 3, &[false, false, true]).len(), 18 * 6);
        assert_eq!(admissible_tuples(3, 2, &[true]).len(), 6);
        assert_eq!(admissible_tuples(3, 2, &[false]).len(), 12);
    }

    #[test]
    fn generating_sets_generate() {
        let moduli = [27u64, 9, 3];
        let all = admissible_tuples(3, 3, &[false, false, false]);
        let gens = generating_set(&all, &moduli);
        assert!(gens.len() <= 3);
    }

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(6);
        uf.union(4, 2);
        uf.union(2, 5);
        assert_eq!(uf.find(5), 2);
        assert!(uf.is_root(0) && !uf.is_root(4));
    }

    #[test]
    fn criterion_order_9() {
        for mode in Mode::ALL {
            assert_eq!(
                criterion_orbit_count(3, 2, mode, false).unwrap(),
                enumerate_p2(3, mode).unwrap().combined
            );
        }
    }

    #[test]
    fn criterion_order_27_undirected() {
        let poly = criterion_orbit_count(3, 3, Mode::Undirected, false).unwrap();
        assert_eq!(poly.evaluate_i64(1), BigInt::from(928));
        assert_eq!(poly.coeff(20), BigInt::from(34));
    }

    #[test]
    fn criterion_limits() {
        assert!(matches!(
            criterion_orbit_count(3, 3, Mode::Directed, false),
            Err(Error::TooLarge(_))
        ));
        assert!(matches!(
            criterion_orbit_count(7, 2, Mode::Directed, true),
            Err(Error::TooLarge(_))
        ));
        assert!(criterion_orbit_count(3, 1, Mode::Directed, false).is_err());
    }

    #[test]
    fn appendix_a_small_primes() {
        for p in [3, 5, 7] {
            for mode in Mode::ALL {
                let r = appendix_a_check(p, mode).unwrap();
                assert!(r.all_hold(), "p = {p} {mode}");
            }
        }
        let (_, a22) = appendix_a_closed_forms(7, Mode::Directed).unwrap();
        assert_eq!(a22.coeff(24), BigInt::from(68));
    }
}
