//! Structural enumeration through the lattice of Schur rings over `Z_n`.
//!
//! For each ring `S_i` with automorphism group `G_i`, `f_i(t)` counts the
//! labelled connecting sets that are unions of basic sets, and the number of
//! isomorphism classes whose automorphism group is exactly `G_i` is
//!
//! ```text
//! g_i = (|G_i| / |N(G_i)|) (f_i - sum over S_j strictly inside S_i of (|N(G_j)| / |G_j|) g_j)
//! ```
//!
//! Catalogs for `n = 9` (all rings) and `n = 27` (symmetric rings only) are
//! embedded from `data/srings.txt`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiplier::Mode;
use crate::polyring::{product_one_plus_powers, Polynomial};

const CATALOG: &str = include_str!("../data/srings.txt");

/// A partition of `Z_n` into basic sets, with optional automorphism data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurRing {
    modulus: u64,
    label: usize,
    basic_sets: Vec<Vec<u64>>,
    group_name: Option<String>,
    aut_order: Option<BigInt>,
    normalizer_index: Option<u64>,
}

impl SchurRing {
    /// Checks only that `sets` partition `Z_n`; ring axioms are checked by
    /// [`validate_sring`].
    pub fn new(modulus: u64, label: usize, sets: Vec<Vec<u64>>) -> Result<Self> {
        let mut seen = vec![false; modulus as usize];
        let mut basic_sets = Vec::with_capacity(sets.len());
        for mut s in sets {
            if s.is_empty() {
                return Err(Error::InvalidBlocks("empty basic set".into()));
            }
            s.sort_unstable();
            for &x in &s {
                if x >= modulus || seen[x as usize] {
                    return Err(Error::InvalidBlocks(format!(
                        "{x} is out of range or repeated in a partition of Z_{modulus}"
                    )));
                }
                seen[x as usize] = true;
            }
            basic_sets.push(s);
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidBlocks(format!(
                "basic sets do not cover Z_{modulus}"
            )));
        }
        basic_sets.sort();
        Ok(Self {
            modulus,
            label,
            basic_sets,
            group_name: None,
            aut_order: None,
            normalizer_index: None,
        })
    }

    /// Attaches `|G|` and `[N(G) : G]`.
    pub fn with_groups(mut self, aut_order: BigInt, normalizer_index: u64) -> Self {
        self.aut_order = Some(aut_order);
        self.normalizer_index = Some(normalizer_index);
        self
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn basic_sets(&self) -> &[Vec<u64>] {
        &self.basic_sets
    }

    pub fn rank(&self) -> usize {
        self.basic_sets.len()
    }

    pub fn group_name(&self) -> Option<&str> {
        self.group_name.as_deref()
    }

    pub fn aut_order(&self) -> Option<&BigInt> {
        self.aut_order.as_ref()
    }

    pub fn normalizer_index(&self) -> Option<u64> {
        self.normalizer_index
    }

    pub fn normalizer_order(&self) -> Option<BigInt> {
        Some(self.aut_order.as_ref()? * BigInt::from(self.normalizer_index?))
    }

    /// Basic-set index of every residue.
    pub fn colouring(&self) -> Vec<usize> {
        let mut c = vec![0; self.modulus as usize];
        for (i, s) in self.basic_sets.iter().enumerate() {
            for &x in s {
                c[x as usize] = i;
            }
        }
        c
    }

    /// Basic sets merged with their negatives, excluding `{0}`.
    pub fn symmetrized_sets(&self) -> Vec<Vec<u64>> {
        let n = self.modulus;
        let mut out: BTreeSet<Vec<u64>> = BTreeSet::new();
        for s in &self.basic_sets {
            if s == &[0] {
                continue;
            }
            let mut m: BTreeSet<u64> = s.iter().copied().collect();
            m.extend(s.iter().map(|&x| (n - x) % n));
            out.insert(m.into_iter().collect());
        }
        out.into_iter().collect()
    }

    /// `true` if every basic set of `self` is a union of basic sets of `other`.
    pub fn is_contained_in(&self, other: &SchurRing) -> bool {
        if self.modulus != other.modulus {
            return false;
        }
        let colour = self.colouring();
        other.basic_sets.iter().all(|s| {
            s.iter()
                .all(|&x| colour[x as usize] == colour[s[0] as usize])
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SringValidation {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

/// Checks `T_0 = {0}`, closure under negation and constancy of every product
/// `T_i T_j` on each basic set.
pub fn validate_sring(s: &SchurRing) -> SringValidation {
    let n = s.modulus as usize;
    let mut diagnostics = Vec::new();
    if !s.basic_sets.iter().any(|b| b == &[0]) {
        diagnostics.push("{0} is not a basic set".to_string());
    }
    for b in &s.basic_sets {
        let neg: Vec<u64> = {
            let mut v: Vec<u64> = b.iter().map(|&x| (n as u64 - x) % n as u64).collect();
            v.sort_unstable();
            v
        };
        if !s.basic_sets.contains(&neg) {
            diagnostics.push(format!("negative of {b:?} is not a basic set"));
        }
    }
    let mut coeff = vec![0u64; n];
    for (i, a) in s.basic_sets.iter().enumerate() {
        for (j, b) in s.basic_sets.iter().enumerate() {
            coeff.iter_mut().for_each(|c| *c = 0);
            for &x in a {
                for &y in b {
                    coeff[(x as usize + y as usize) % n] += 1;
                }
            }
            for (k, c) in s.basic_sets.iter().enumerate() {
                let first = coeff[c[0] as usize];
                if c.iter().any(|&z| coeff[z as usize] != first) {
                    diagnostics.push(format!(
                        "product T_{i} T_{j} is not constant on T_{k} = {c:?}"
                    ));
                }
            }
        }
    }
    SringValidation {
        valid: diagnostics.is_empty(),
        diagnostics,
    }
}

/// Labelled generating function: product of `(1 + t^|T|)` over the non-zero
/// basic sets (symmetrized in undirected mode).
pub fn labelled_genfn(s: &SchurRing, mode: Mode) -> Polynomial {
    let weights: Vec<u32> = match mode {
        Mode::Directed => s
            .basic_sets
            .iter()
            .filter(|b| b.as_slice() != [0])
            .map(|b| b.len() as u32)
            .collect(),
        Mode::Undirected => s
            .symmetrized_sets()
            .iter()
            .map(|b| b.len() as u32)
            .collect(),
    };
    product_one_plus_powers(&weights)
}

/// Rings of one catalog, ordered by rank so that containment implies order.
#[derive(Clone, Debug)]
pub struct SRingLattice {
    modulus: u64,
    symmetric_only: bool,
    rings: Vec<SchurRing>,
    below: Vec<Vec<bool>>,
}

impl SRingLattice {
    pub fn new(mut rings: Vec<SchurRing>, symmetric_only: bool) -> Result<Self> {
        let modulus = rings
            .first()
            .map(|r| r.modulus)
            .ok_or_else(|| Error::InvalidBlocks("empty lattice".into()))?;
        if rings.iter().any(|r| r.modulus != modulus) {
            return Err(Error::InvalidBlocks("rings over different moduli".into()));
        }
        rings.sort_by_key(|r| (r.rank(), r.label));
        let below = rings
            .iter()
            .map(|a| rings.iter().map(|b| a.is_contained_in(b)).collect())
            .collect();
        Ok(Self {
            modulus,
            symmetric_only,
            rings,
            below,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn symmetric_only(&self) -> bool {
        self.symmetric_only
    }

    pub fn rings(&self) -> &[SchurRing] {
        &self.rings
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn by_label(&self, label: usize) -> Option<&SchurRing> {
        self.rings.iter().find(|r| r.label == label)
    }

    /// `S_a ⊆ S_b` for positions `a`, `b` in [`Self::rings`].
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    pub fn containment_matrix(&self) -> &[Vec<bool>] {
        &self.below
    }
}

/// Ring being parsed: modulus, label, sets, group name, aut order, normalizer order, index.
type PendingRing = (
    u64,
    usize,
    Vec<Vec<u64>>,
    Option<String>,
    Option<BigInt>,
    Option<BigInt>,
    Option<u64>,
);

fn parse_catalog(text: &str) -> Result<Vec<SchurRing>> {
    let bad = |line: usize, msg: &str| Error::Parse(format!("srings line {}: {msg}", line + 1));
    let mut out = Vec::new();
    let mut current: Option<PendingRing> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let int = |s: &str| s.parse::<u64>().map_err(|_| bad(ln, "expected an integer"));
        let big = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| bad(ln, "expected an integer"))
        };
        match key {
            "ring" => {
                if current.is_some() {
                    return Err(bad(ln, "ring without end"));
                }
                let v: Vec<&str> = rest.split_whitespace().collect();
                if v.len() != 2 {
                    return Err(bad(ln, "expected: ring <n> <label>"));
                }
                current = Some((
                    int(v[0])?,
                    int(v[1])? as usize,
                    Vec::new(),
                    None,
                    None,
                    None,
                    None,
                ));
            }
            "end" => {
                let (n, label, sets, name, aut, norm, index) =
                    current.take().ok_or_else(|| bad(ln, "end without ring"))?;
                let mut ring = SchurRing::new(n, label, sets)?;
                ring.group_name = name;
                if let Some(aut) = aut {
                    let index = match (norm, index) {
                        (Some(norm), None) => {
                            let (q, r) = norm.div_rem(&aut);
                            if !r.is_zero() {
                                return Err(bad(ln, "normalizer order not divisible by |G|"));
                            }
                            q.to_u64().ok_or_else(|| bad(ln, "index too large"))?
                        }
                        (None, Some(i)) => i,
                        _ => return Err(bad(ln, "give exactly one of normalizer / index")),
                    };
                    ring = ring.with_groups(aut, index);
                }
                out.push(ring);
            }
            _ => {
                let cur = current
                    .as_mut()
                    .ok_or_else(|| bad(ln, "field outside a ring"))?;
                match key {
                    "set" => cur.2.push(
                        rest.split_whitespace()
                            .map(int)
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    "group" => cur.3 = Some(rest.to_string()),
                    "aut" => cur.4 = Some(big(rest)?),
                    "normalizer" => cur.5 = Some(big(rest)?),
                    "index" => cur.6 = Some(int(rest)?),
                    _ => return Err(bad(ln, "unknown key")),
                }
            }
        }
    }
    if current.is_some() {
        return Err(Error::Parse("srings: unterminated ring".into()));
    }
    Ok(out)
}

/// Embedded catalog: every ring over `Z_9`, or the symmetric rings over `Z_27`.
pub fn catalog(n: u64) -> Result<SRingLattice> {
    if n != 9 && n != 27 {
        return Err(Error::Unsupported(format!(
            "no Schur ring catalog for n = {n}"
        )));
    }
    let rings: Vec<SchurRing> = parse_catalog(CATALOG)?
        .into_iter()
        .filter(|r| r.modulus == n)
        .collect();
    SRingLattice::new(rings, n == 27)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingGenfns {
    pub label: usize,
    pub f: Polynomial,
    pub g: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub n: u64,
    pub mode: Mode,
    /// Per ring, in catalog label order.
    pub rings: Vec<RingGenfns>,
    pub total: Polynomial,
}

impl StructuralReport {
    pub fn ring(&self, label: usize) -> Option<&RingGenfns> {
        self.rings.iter().find(|r| r.label == label)
    }
}

/// Unlabelled generating functions `g_i` and their sum.
pub fn unlabelled_genfns(lat: &SRingLattice, mode: Mode) -> Result<StructuralReport> {
    if lat.symmetric_only && mode == Mode::Directed {
        return Err(Error::Unsupported(format!(
            "the catalog for n = {} holds symmetric rings only",
            lat.modulus
        )));
    }
    let m = lat.len();
    let mut g: Vec<Polynomial> = Vec::with_capacity(m);
    let mut f_all = Vec::with_capacity(m);
    for i in 0..m {
        let ring = &lat.rings[i];
        let index = ring
            .normalizer_index
            .ok_or_else(|| Error::Unsupported(format!("ring {} has no group data", ring.label)))?;
        let f = labelled_genfn(ring, mode);
        let mut rest = f.clone();
        for (j, gj) in g.iter().enumerate() {
            if lat.contains(j, i) {
                let idx = BigInt::from(lat.rings[j].normalizer_index.unwrap_or(1));
                rest -= &gj.scale(&idx);
            }
        }
        let gi = rest
            .div_exact(&BigInt::from(index))
            .ok_or(Error::NonIntegral { ring: ring.label })?;
        if !gi.is_nonnegative() {
            return Err(Error::InvariantViolated(format!(
                "g_{} has a negative coefficient",
                ring.label
            )));
        }
        g.push(gi);
        f_all.push(f);
    }
    let total: Polynomial = g.iter().cloned().sum();
    let mut rings: Vec<RingGenfns> = (0..m)
        .map(|i| RingGenfns {
            label: lat.rings[i].label,
            f: f_all[i].clone(),
            g: g[i].clone(),
        })
        .collect();
    rings.sort_by_key(|r| r.label);
    Ok(StructuralReport {
        n: lat.modulus,
        mode,
        rings,
        total,
    })
}

pub fn structural_enumerate(n: u64, mode: Mode) -> Result<StructuralReport> {
    unlabelled_genfns(&catalog(n)?, mode)
}

/// Calls `visit` on every permutation of `0..n`, split across threads by the
/// image of 0 and 1, and returns the permutations it accepts.
fn scan_permutations<F>(n: usize, visit: F) -> Vec<Vec<u8>>
where
    F: Fn(&[u8]) -> bool + Sync,
{
    let prefixes: Vec<(u8, u8)> = (0..n as u8)
        .flat_map(|a| (0..n as u8).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    prefixes
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let mut tail: Vec<u8> = (0..n as u8).filter(|&x| x != a && x != b).collect();
            let mut found = Vec::new();
            let mut perm = vec![0u8; n];
            loop {
                perm[0] = a;
                perm[1] = b;
                perm[2..].copy_from_slice(&tail);
                if visit(&perm) {
                    found.push(perm.clone());
                }
                if !next_permutation(&mut tail) {
                    break;
                }
            }
            found
        })
        .collect()
}

fn next_permutation(v: &mut [u8]) -> bool {
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

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutCheck {
    pub label: usize,
    pub expected_aut: String,
    pub computed_aut: u64,
    pub expected_index: u64,
    pub computed_index: u64,
}

impl AutCheck {
    pub fn matches(&self) -> bool {
        self.expected_aut == self.computed_aut.to_string()
            && self.expected_index == self.computed_index
    }
}

/// `|G|` and `[N(G) : G]` by exhaustive search, where `G` preserves the colour
/// `c(x, y) = basic set of y - x`. `G` is the automorphism group of a coloured
/// complete digraph, hence determined by its orbitals, so `N(G)` is the set of
/// permutations that permute the orbitals.
pub fn automorphism_data(ring: &SchurRing) -> Result<(u64, u64)> {
    let n = ring.modulus as usize;
    if n > 9 {
        return Err(Error::TooLarge(format!("permutation scan over S_{n}")));
    }
    let colour = ring.colouring();
    let c = |x: usize, y: usize| colour[(y + n - x) % n];
    let group = scan_permutations(n, |g| {
        (0..n).all(|x| (0..n).all(|y| c(g[x] as usize, g[y] as usize) == c(x, y)))
    });
    let mut orbital = vec![usize::MAX; n * n];
    let mut count = 0;
    for start in 0..n * n {
        if orbital[start] != usize::MAX {
            continue;
        }
        let (x, y) = (start / n, start % n);
        for g in &group {
            orbital[g[x] as usize * n + g[y] as usize] = count;
        }
        count += 1;
    }
    let normalizer = scan_permutations(n, |s| {
        let mut image = vec![usize::MAX; count];
        for x in 0..n {
            for y in 0..n {
                let o = orbital[x * n + y];
                let t = orbital[s[x] as usize * n + s[y] as usize];
                if image[o] == usize::MAX {
                    image[o] = t;
                } else if image[o] != t {
                    return false;
                }
            }
        }
        let distinct: BTreeSet<usize> = image.iter().copied().collect();
        distinct.len() == count
    });
    let (q, r) = normalizer.len().div_rem(&group.len());
    if r != 0 {
        return Err(Error::InvariantViolated(
            "|G| does not divide |N(G)|".into(),
        ));
    }
    Ok((group.len() as u64, q as u64))
}

/// Recomputes `|G_i|` and `[N(G_i) : G_i]` for every ring over `Z_9`.
pub fn verify_aut_orders_n9() -> Result<Vec<AutCheck>> {
    catalog(9)?
        .rings()
        .iter()
        .map(|ring| {
            let (aut, index) = automorphism_data(ring)?;
            Ok(AutCheck {
                label: ring.label,
                expected_aut: ring.aut_order().map(|a| a.to_string()).unwrap_or_default(),
                computed_aut: aut,
                expected_index: ring.normalizer_index().unwrap_or(0),
                computed_index: index,
            })
        })
        .collect()
}

/// Rank-2 ring `<{0}, Z_n - {0}>`.
pub fn trivial_ring(n: u64) -> SchurRing {
    SchurRing::new(n, 0, vec![vec![0], (1..n).collect()])
        .expect("valid partition")
        .with_groups(BigInt::one(), 1)
}
