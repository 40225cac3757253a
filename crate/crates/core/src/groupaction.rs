//! Multiplicative actions of unit groups on weighted block systems.
//!
//! Instead of manipulating cycle indices symbolically, the enumerator here
//! substitutes each orbit of a group element directly: an orbit of blocks
//! whose total point count is `w` contributes the factor `1 + t^w`. With
//! singleton blocks this is the classical `x_r := 1 + t^r`; with blocks of
//! unequal sizes it is the only substitution that still counts valencies.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{is_prime, mul_mod};
use crate::error::{Error, Result};
use crate::polyring::{product_one_plus_powers, Polynomial};

/// `Z*_n`, stored as the sorted list of residues coprime to `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitsGroup {
    modulus: u64,
    elements: Vec<u64>,
}

pub fn units(n: u64) -> UnitsGroup {
    assert!(n >= 2, "units group needs n >= 2");
    UnitsGroup {
        modulus: n,
        elements: (1..n).filter(|a| a.gcd(&n) == 1).collect(),
    }
}

impl UnitsGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&(a % self.modulus)).is_ok()
    }
}

/// Disjoint blocks of non-zero residues mod `n`. A block's weight is its
/// cardinality: a connecting set that is a union of blocks gains that many
/// out-neighbours per block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockSystem {
    modulus: u64,
    blocks: Vec<Vec<u64>>,
}

impl BlockSystem {
    pub fn new(modulus: u64, blocks: Vec<Vec<u64>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::InvalidBlocks("empty block".into()));
            }
            let mut b: Vec<u64> = block.iter().map(|x| x % modulus).collect();
            b.sort_unstable();
            for &x in &b {
                if x == 0 {
                    return Err(Error::InvalidBlocks("block contains 0".into()));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidBlocks(format!("residue {x} appears twice")));
                }
            }
            normalized.push(b);
        }
        normalized.sort();
        Ok(Self {
            modulus,
            blocks: normalized,
        })
    }

    pub fn singletons(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        Self::new(modulus, residues.into_iter().map(|x| vec![x]).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn blocks(&self) -> &[Vec<u64>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.len() as u32).collect()
    }

    pub fn total_weight(&self) -> u32 {
        self.blocks.iter().map(|b| b.len() as u32).sum()
    }

    pub fn residues(&self) -> Vec<u64> {
        let mut r: Vec<u64> = self.blocks.iter().flatten().copied().collect();
        r.sort_unstable();
        r
    }

    /// Block index of each residue, `usize::MAX` for residues outside the system.
    fn block_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.modulus as usize];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                idx[x as usize] = i;
            }
        }
        idx
    }

    /// Permutation of block indices induced by `x -> g x`.
    pub fn block_permutation(&self, g: u64) -> Result<Vec<usize>> {
        self.block_permutation_with(&self.block_index(), g)
    }

    fn block_permutation_with(&self, index: &[usize], g: u64) -> Result<Vec<usize>> {
        let n = self.modulus;
        let mut perm = Vec::with_capacity(self.blocks.len());
        let mut hit = vec![false; self.blocks.len()];
        for block in &self.blocks {
            let not_invariant = || Error::NotInvariant {
                modulus: n,
                multiplier: g,
                block: block.clone(),
            };
            let target = index[mul_mod(g, block[0], n) as usize];
            if target == usize::MAX || self.blocks[target].len() != block.len() || hit[target] {
                return Err(not_invariant());
            }
            if block
                .iter()
                .any(|&x| index[mul_mod(g, x, n) as usize] != target)
            {
                return Err(not_invariant());
            }
            hit[target] = true;
            perm.push(target);
        }
        Ok(perm)
    }

    /// Checks that every multiplier permutes the blocks.
    pub fn validate_invariant(&self, multipliers: &[u64]) -> Result<()> {
        let index = self.block_index();
        for &g in multipliers {
            self.block_permutation_with(&index, g)?;
        }
        Ok(())
    }

    /// `(cycle length, total weight)` of each orbit of blocks under `g`.
    pub fn orbits_under(&self, g: u64) -> Result<Vec<(u32, u32)>> {
        let perm = self.block_permutation(g)?;
        Ok(cycles_of(&perm, &self.weights()))
    }

    /// Disjoint union of two systems over the same modulus.
    pub fn union(&self, other: &BlockSystem) -> Result<BlockSystem> {
        if self.modulus != other.modulus {
            return Err(Error::InvalidBlocks("moduli differ".into()));
        }
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        BlockSystem::new(self.modulus, blocks)
    }
}

impl fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockSystem(mod {}: ", self.modulus)?;
        f.debug_list().entries(self.blocks.iter()).finish()?;
        f.write_str(")")
    }
}

fn cycles_of(perm: &[usize], weights: &[u32]) -> Vec<(u32, u32)> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let (mut len, mut weight) = (0u32, 0u32);
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            weight += weights[i];
            i = perm[i];
        }
        out.push((len, weight));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// One multiplier acts on every component.
    Single,
    /// Independent multipliers, one per slot.
    IndependentProduct { factors: usize },
    /// Pairs `(a, a')` with `a' = a (mod p)`; slot 0 carries `a`, slot 1 carries `a'`.
    CongruentPair { p: u64 },
}

impl GroupKind {
    pub fn arity(&self) -> usize {
        match self {
            GroupKind::Single => 1,
            GroupKind::IndependentProduct { factors } => *factors,
            GroupKind::CongruentPair { .. } => 2,
        }
    }
}

/// A group of multiplier tuples acting componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierGroup {
    modulus: u64,
    kind: GroupKind,
    elements: Vec<Vec<u64>>,
}

impl MultiplierGroup {
    pub fn single(n: u64) -> Self {
        Self {
            modulus: n,
            kind: GroupKind::Single,
            elements: units(n).elements.into_iter().map(|a| vec![a]).collect(),
        }
    }

    pub fn independent_product(n: u64, factors: usize) -> Self {
        let u = units(n).elements;
        let mut elements: Vec<Vec<u64>> = vec![Vec::new()];
        for _ in 0..factors {
            elements = elements
                .into_iter()
                .flat_map(|prefix| {
                    u.iter().map(move |&a| {
                        let mut t = prefix.clone();
                        t.push(a);
                        t
                    })
                })
                .collect();
        }
        Self {
            modulus: n,
            kind: GroupKind::IndependentProduct { factors },
            elements,
        }
    }

    pub fn congruent_pair(n: u64, p: u64) -> Result<Self> {
        make_pair_group(n, p)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, tuple: &[u64]) -> bool {
        self.elements.iter().any(|e| e.as_slice() == tuple)
    }

    /// Closure under componentwise multiplication.
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&Vec<u64>> = self.elements.iter().collect();
        let n = self.modulus;
        self.elements.iter().all(|a| {
            self.elements.iter().all(|b| {
                let prod: Vec<u64> = a.iter().zip(b).map(|(x, y)| mul_mod(*x, *y, n)).collect();
                set.contains(&prod)
            })
        })
    }
}

/// All pairs `(a, a')` of units mod `n` with `a' = a (mod p)`.
pub fn make_pair_group(n: u64, p: u64) -> Result<MultiplierGroup> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if !n.is_multiple_of(p) {
        return Err(Error::Unsupported(format!("{p} does not divide {n}")));
    }
    let u = units(n).elements;
    let elements = u
        .iter()
        .flat_map(|&a| {
            u.iter()
                .filter(move |&&b| b % p == a % p)
                .map(move |&b| vec![a, b])
        })
        .collect();
    Ok(MultiplierGroup {
        modulus: n,
        kind: GroupKind::CongruentPair { p },
        elements,
    })
}

/// A block system acted on by one coordinate (`slot`) of the multiplier tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub slot: usize,
    pub system: BlockSystem,
}

impl Component {
    pub fn new(slot: usize, system: BlockSystem) -> Self {
        Self { slot, system }
    }
}

/// Orbits of one group element: `(cycle length, total point weight)` pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleMonomial {
    cycles: Vec<(u32, u32)>,
}

impl CycleMonomial {
    pub fn new(mut cycles: Vec<(u32, u32)>) -> Self {
        cycles.sort_unstable();
        Self { cycles }
    }

    pub fn cycles(&self) -> &[(u32, u32)] {
        &self.cycles
    }

    pub fn total_weight(&self) -> u32 {
        self.cycles.iter().map(|c| c.1).sum()
    }

    pub fn num_orbits(&self) -> usize {
        self.cycles.len()
    }

    /// `prod (1 + t^w)` over the orbits.
    pub fn substitute(&self) -> Polynomial {
        let weights: Vec<u32> = self.cycles.iter().map(|c| c.1).collect();
        product_one_plus_powers(&weights)
    }
}

fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl fmt::Debug for CycleMonomial {
    /// Cycle-length notation, e.g. `x₂x₆` or `x₁²x₃²`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: std::collections::BTreeMap<u32, u32> = Default::default();
        for (len, _) in &self.cycles {
            *counts.entry(*len).or_default() += 1;
        }
        for (len, count) in counts {
            write!(f, "x{}", subscript(len))?;
            if count > 1 {
                f.write_str(&superscript(count))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for CycleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn element_cycles(g: &[u64], components: &[Component]) -> Result<CycleMonomial> {
    let mut cycles = Vec::new();
    for c in components {
        let m = *g.get(c.slot).ok_or_else(|| {
            Error::Unsupported(format!("slot {} outside a {}-tuple", c.slot, g.len()))
        })?;
        cycles.extend(c.system.orbits_under(m)?);
    }
    Ok(CycleMonomial::new(cycles))
}

/// Orbit weights of each group element, tallied by multiset.
fn weight_type_counts(
    group: &MultiplierGroup,
    components: &[Component],
) -> Result<Vec<(Vec<u32>, u64)>> {
    let arity = group.kind.arity();
    if let Some(c) = components.iter().find(|c| c.slot >= arity) {
        return Err(Error::Unsupported(format!(
            "component slot {} but group arity {arity}",
            c.slot
        )));
    }
    // Per component, the orbit weights for each distinct multiplier value.
    let mut per_component: Vec<HashMap<u64, Vec<u32>>> = Vec::with_capacity(components.len());
    for c in components {
        let mut cache = HashMap::new();
        for e in &group.elements {
            let m = e[c.slot];
            if let std::collections::hash_map::Entry::Vacant(v) = cache.entry(m) {
                let w: Vec<u32> = c.system.orbits_under(m)?.into_iter().map(|o| o.1).collect();
                v.insert(w);
            }
        }
        per_component.push(cache);
    }
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for e in &group.elements {
        let mut key = Vec::new();
        for (c, cache) in components.iter().zip(&per_component) {
            key.extend_from_slice(&cache[&e[c.slot]]);
        }
        key.sort_unstable();
        *counts.entry(key).or_default() += 1;
    }
    let mut out: Vec<(Vec<u32>, u64)> = counts.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `(1/|G|) sum_g prod_{orbits O of g} (1 + t^{w(O)})`, checked for exact division.
pub fn orbit_weight_enumerator(
    group: &MultiplierGroup,
    components: &[Component],
) -> Result<Polynomial> {
    let types = weight_type_counts(group, components)?;
    let sum = types
        .par_iter()
        .map(|(weights, count)| product_one_plus_powers(weights).scale(&BigInt::from(*count)))
        .reduce(Polynomial::zero, |a, b| a + b);
    let order = BigInt::from(group.order());
    sum.div_exact(&order).ok_or(Error::NonIntegralCount {
        group_order: group.order(),
    })
}

/// Number of orbits on unions of blocks: `(1/|G|) sum_g 2^{#orbits(g)}`.
pub fn orbit_count(group: &MultiplierGroup, components: &[Component]) -> Result<BigInt> {
    let types = weight_type_counts(group, components)?;
    let mut sum = BigInt::zero();
    for (weights, count) in types {
        sum += (BigInt::one() << weights.len()) * BigInt::from(count);
    }
    let order = BigInt::from(group.order());
    let (q, r) = sum.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::NonIntegralCount {
            group_order: group.order(),
        });
    }
    Ok(q)
}
