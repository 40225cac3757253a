//! Multiplier-method enumeration of circulants of order `p`, `p^2` and `p^3`.
//!
//! Each isomorphism regime of the layer criterion becomes one counting
//! subproblem: a multiplier group acting on (possibly blocked) layers. The
//! subproblem enumerators are combined by inclusion-exclusion:
//!
//! ```text
//! p^2:  A = A_1 + A_21 - A_22
//! p^3:  A = A_1 + A_21 - A_22 + A_31 - A_32 + A_41 - A_42
//!           + A_51 - A_521 - A_522 + A_523
//! ```
//!
//! Block systems used below (`Y*_0`, `Y**_0`, `Y*_1` are the orbits of
//! `1+p^2` on `Y_0`, `1+p` on `Y_0` and `1+p` on `Y_1`):
//!
//! | term  | group             | slot 0              | slot 1  | slot 2 |
//! |-------|-------------------|---------------------|---------|--------|
//! | A_1   | independent x3    | Y**_0               | Y*_1    | Y_2    |
//! | A_21  | single            | Y_0, Y_1, Y_2       |         |        |
//! | A_22  | single            | Y*_0, Y_1, Y_2      |         |        |
//! | A_31  | independent x2    | Y*_0, Y*_1          | Y_2     |        |
//! | A_32  | independent x2    | Y**_0, Y*_1         | Y_2     |        |
//! | A_41  | independent x2    | Y_1, Y_2            | Y**_0   |        |
//! | A_42  | independent x2    | Y*_1, Y_2           | Y**_0   |        |
//! | A_51  | pair a' = a mod p | Y_1, Y_2            | Y*_0    |        |
//! | A_521 | pair              | Y_1, Y_2            | Y**_0   |        |
//! | A_522 | pair              | Y*_1, Y_2           | Y*_0    |        |
//! | A_523 | pair              | Y*_1, Y_2           | Y**_0   |        |
//!
//! In undirected mode every block system is symmetrized first, so block
//! weights (and therefore all exponents) are even.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::is_odd_prime;
use crate::error::{Error, Result};
use crate::groupaction::{
    orbit_count, orbit_weight_enumerator, units, BlockSystem, Component, GroupKind, MultiplierGroup,
};
use crate::layers::{invariance_blocks, invariance_multiplier, symmetrize, LayerDecomposition};
use crate::polyring::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Directed,
    Undirected,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Undirected, Mode::Directed];

    pub fn short(&self) -> char {
        match self {
            Mode::Directed => 'd',
            Mode::Undirected => 'u',
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Directed => "directed",
            Mode::Undirected => "undirected",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "directed" | "dir" => Ok(Mode::Directed),
            "u" | "undirected" | "undir" => Ok(Mode::Undirected),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// One counting subproblem: a multiplier group and the block systems it acts on.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    name: String,
    modulus: u64,
    kind: GroupKind,
    components: Vec<Component>,
}

impl ActionSpec {
    pub fn new(
        name: impl Into<String>,
        modulus: u64,
        kind: GroupKind,
        components: Vec<Component>,
    ) -> Result<Self> {
        let spec = Self {
            name: name.into(),
            modulus,
            kind,
            components,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let n = self.modulus;
        let mut covered = vec![0u32; n as usize];
        for c in &self.components {
            if c.system.modulus() != n {
                return Err(Error::InvalidBlocks(format!(
                    "{}: modulus mismatch",
                    self.name
                )));
            }
            if c.slot >= self.kind.arity() {
                return Err(Error::InvalidBlocks(format!(
                    "{}: bad slot {}",
                    self.name, c.slot
                )));
            }
            for x in c.system.residues() {
                covered[x as usize] += 1;
            }
        }
        if covered[1..].iter().any(|&c| c != 1) {
            return Err(Error::InvalidBlocks(format!(
                "{}: block systems do not cover Z'_{n} exactly once",
                self.name
            )));
        }
        let u = units(n);
        for c in &self.components {
            c.system.validate_invariant(u.elements())?;
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The full acting group.
    pub fn group(&self) -> Result<MultiplierGroup> {
        Ok(match self.kind {
            GroupKind::Single => MultiplierGroup::single(self.modulus),
            GroupKind::IndependentProduct { factors } => {
                MultiplierGroup::independent_product(self.modulus, factors)
            }
            GroupKind::CongruentPair { p } => MultiplierGroup::congruent_pair(self.modulus, p)?,
        })
    }

    fn slot_components(&self, slot: usize) -> Vec<Component> {
        self.components
            .iter()
            .filter(|c| c.slot == slot)
            .map(|c| Component::new(0, c.system.clone()))
            .collect()
    }

    /// Valency enumerator. Independent products are evaluated as the product
    /// of their factors' enumerators.
    pub fn enumerate(&self) -> Result<Polynomial> {
        match self.kind {
            GroupKind::IndependentProduct { factors } => {
                let single = MultiplierGroup::single(self.modulus);
                let mut acc = Polynomial::one();
                for slot in 0..factors {
                    acc = &acc * &orbit_weight_enumerator(&single, &self.slot_components(slot))?;
                }
                Ok(acc)
            }
            _ => orbit_weight_enumerator(&self.group()?, &self.components),
        }
    }

    /// Valency enumerator summed over every element of the full group.
    pub fn enumerate_exhaustive(&self) -> Result<Polynomial> {
        orbit_weight_enumerator(&self.group()?, &self.components)
    }

    /// Number of orbits regardless of valency, by scalar Burnside counting.
    pub fn count(&self) -> Result<BigInt> {
        match self.kind {
            GroupKind::IndependentProduct { factors } => {
                let single = MultiplierGroup::single(self.modulus);
                let mut acc = BigInt::one();
                for slot in 0..factors {
                    acc *= orbit_count(&single, &self.slot_components(slot))?;
                }
                Ok(acc)
            }
            _ => orbit_count(&self.group()?, &self.components),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

fn prepare(sys: BlockSystem, mode: Mode) -> Result<BlockSystem> {
    match mode {
        Mode::Directed => Ok(sys),
        Mode::Undirected => symmetrize(&sys),
    }
}

/// Layer partitions of `Z'_{p^3}` used by the eleven subproblems.
struct CubeSystems {
    y0: BlockSystem,
    y0_star: BlockSystem,
    y0_star2: BlockSystem,
    y1: BlockSystem,
    y1_star: BlockSystem,
    y2: BlockSystem,
}

impl CubeSystems {
    fn new(p: u64, mode: Mode) -> Result<Self> {
        let n = p.pow(3);
        let layers = LayerDecomposition::new(n)?;
        let s00 = invariance_multiplier(p, 3, 0, 0)?;
        let s01 = invariance_multiplier(p, 3, 0, 1)?;
        let s10 = invariance_multiplier(p, 3, 1, 0)?;
        Ok(Self {
            y0: prepare(layers.singleton_blocks(0)?, mode)?,
            y0_star: prepare(invariance_blocks(n, 0, s00)?, mode)?,
            y0_star2: prepare(invariance_blocks(n, 0, s01)?, mode)?,
            y1: prepare(layers.singleton_blocks(1)?, mode)?,
            y1_star: prepare(invariance_blocks(n, 1, s10)?, mode)?,
            y2: prepare(layers.singleton_blocks(2)?, mode)?,
        })
    }
}

pub const P3_TERMS: [(&str, i8); 11] = [
    ("A_1", 1),
    ("A_21", 1),
    ("A_22", -1),
    ("A_31", 1),
    ("A_32", -1),
    ("A_41", 1),
    ("A_42", -1),
    ("A_51", 1),
    ("A_521", -1),
    ("A_522", -1),
    ("A_523", 1),
];

pub const P2_TERMS: [(&str, i8); 3] = [("A_1", 1), ("A_21", 1), ("A_22", -1)];

fn sign_of(k: u32, name: &str) -> i8 {
    let table: &[(&str, i8)] = match k {
        3 => &P3_TERMS,
        2 => &P2_TERMS,
        _ => &[("A_1", 1)],
    };
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .unwrap_or(1)
}

pub fn build_specs_p3(p: u64, mode: Mode) -> Result<Vec<ActionSpec>> {
    check_prime(p)?;
    let n = p.pow(3);
    let s = CubeSystems::new(p, mode)?;
    let c = |slot: usize, sys: &BlockSystem| Component::new(slot, sys.clone());
    let single = GroupKind::Single;
    let ind2 = GroupKind::IndependentProduct { factors: 2 };
    let ind3 = GroupKind::IndependentProduct { factors: 3 };
    let pair = GroupKind::CongruentPair { p };
    vec![
        ActionSpec::new(
            "A_1",
            n,
            ind3,
            vec![c(0, &s.y0_star2), c(1, &s.y1_star), c(2, &s.y2)],
        ),
        ActionSpec::new(
            "A_21",
            n,
            single,
            vec![c(0, &s.y0), c(0, &s.y1), c(0, &s.y2)],
        ),
        ActionSpec::new(
            "A_22",
            n,
            single,
            vec![c(0, &s.y0_star), c(0, &s.y1), c(0, &s.y2)],
        ),
        ActionSpec::new(
            "A_31",
            n,
            ind2,
            vec![c(0, &s.y0_star), c(0, &s.y1_star), c(1, &s.y2)],
        ),
        ActionSpec::new(
            "A_32",
            n,
            ind2,
            vec![c(0, &s.y0_star2), c(0, &s.y1_star), c(1, &s.y2)],
        ),
        ActionSpec::new(
            "A_41",
            n,
            ind2,
            vec![c(0, &s.y1), c(0, &s.y2), c(1, &s.y0_star2)],
        ),
        ActionSpec::new(
            "A_42",
            n,
            ind2,
            vec![c(0, &s.y1_star), c(0, &s.y2), c(1, &s.y0_star2)],
        ),
        ActionSpec::new(
            "A_51",
            n,
            pair,
            vec![c(0, &s.y1), c(0, &s.y2), c(1, &s.y0_star)],
        ),
        ActionSpec::new(
            "A_521",
            n,
            pair,
            vec![c(0, &s.y1), c(0, &s.y2), c(1, &s.y0_star2)],
        ),
        ActionSpec::new(
            "A_522",
            n,
            pair,
            vec![c(0, &s.y1_star), c(0, &s.y2), c(1, &s.y0_star)],
        ),
        ActionSpec::new(
            "A_523",
            n,
            pair,
            vec![c(0, &s.y1_star), c(0, &s.y2), c(1, &s.y0_star2)],
        ),
    ]
    .into_iter()
    .collect()
}

pub fn build_specs_p2(p: u64, mode: Mode) -> Result<Vec<ActionSpec>> {
    check_prime(p)?;
    let n = p * p;
    let layers = LayerDecomposition::new(n)?;
    let y0 = prepare(layers.singleton_blocks(0)?, mode)?;
    let y0_star = prepare(
        invariance_blocks(n, 0, invariance_multiplier(p, 2, 0, 0)?)?,
        mode,
    )?;
    let y1 = prepare(layers.singleton_blocks(1)?, mode)?;
    let c = |slot: usize, sys: &BlockSystem| Component::new(slot, sys.clone());
    vec![
        ActionSpec::new(
            "A_1",
            n,
            GroupKind::IndependentProduct { factors: 2 },
            vec![c(0, &y0_star), c(1, &y1)],
        ),
        ActionSpec::new("A_21", n, GroupKind::Single, vec![c(0, &y0), c(0, &y1)]),
        ActionSpec::new(
            "A_22",
            n,
            GroupKind::Single,
            vec![c(0, &y0_star), c(0, &y1)],
        ),
    ]
    .into_iter()
    .collect()
}

pub fn build_specs_prime(p: u64, mode: Mode) -> Result<Vec<ActionSpec>> {
    check_prime(p)?;
    let z = prepare(BlockSystem::singletons(p, 1..p)?, mode)?;
    Ok(vec![ActionSpec::new(
        "A_1",
        p,
        GroupKind::Single,
        vec![Component::new(0, z)],
    )?])
}

pub fn build_specs(p: u64, k: u32, mode: Mode) -> Result<Vec<ActionSpec>> {
    match k {
        1 => build_specs_prime(p, mode),
        2 => build_specs_p2(p, mode),
        3 => build_specs_p3(p, mode),
        _ => Err(Error::Unsupported(format!("k = {k}; only k in 1..=3"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subproblem {
    pub name: String,
    pub sign: i8,
    pub polynomial: Polynomial,
    /// Orbit count from scalar Burnside, independent of `polynomial`.
    pub count: String,
}

/// Per-subproblem enumerators and their inclusion-exclusion combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubproblemReport {
    pub p: u64,
    pub k: u32,
    pub mode: Mode,
    pub subproblems: Vec<Subproblem>,
    pub combined: Polynomial,
}

impl SubproblemReport {
    fn build(p: u64, k: u32, mode: Mode, specs: &[ActionSpec]) -> Result<Self> {
        let results: Vec<Result<Subproblem>> = specs
            .par_iter()
            .map(|spec| {
                Ok(Subproblem {
                    name: spec.name().to_string(),
                    sign: sign_of(k, spec.name()),
                    polynomial: spec.enumerate()?,
                    count: spec.count()?.to_string(),
                })
            })
            .collect();
        let subproblems = results.into_iter().collect::<Result<Vec<_>>>()?;
        let mut combined = Polynomial::zero();
        for s in &subproblems {
            if s.sign > 0 {
                combined += &s.polynomial;
            } else {
                combined -= &s.polynomial;
            }
        }
        let report = Self {
            p,
            k,
            mode,
            subproblems,
            combined,
        };
        report.check_invariants()?;
        Ok(report)
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        if name == "A" {
            return Some(&self.combined);
        }
        self.subproblems
            .iter()
            .find(|s| s.name == name)
            .map(|s| &s.polynomial)
    }

    fn must(&self, name: &str) -> &Polynomial {
        self.get(name)
            .unwrap_or_else(|| panic!("report for k = {} has no term {name}", self.k))
    }

    pub fn total(&self) -> BigInt {
        self.combined.evaluate_i64(1)
    }

    /// Signed sum of the per-subproblem scalar counts.
    pub fn scalar_total(&self) -> BigInt {
        self.subproblems.iter().fold(BigInt::zero(), |acc, s| {
            let c: BigInt = s.count.parse().expect("count is a decimal integer");
            if s.sign > 0 {
                acc + c
            } else {
                acc - c
            }
        })
    }

    /// Subproblems plus the derived differences, in display order.
    pub fn rows(&self) -> Vec<(String, Polynomial)> {
        let g = |n: &str| self.must(n).clone();
        let mut rows = Vec::new();
        match self.k {
            3 => {
                rows.push(("A_1".into(), g("A_1")));
                rows.push(("A_21".into(), g("A_21")));
                rows.push(("A_22".into(), g("A_22")));
                rows.push(("A_2".into(), g("A_21") - g("A_22")));
                rows.push(("A_31".into(), g("A_31")));
                rows.push(("A_32".into(), g("A_32")));
                rows.push(("A_3".into(), g("A_31") - g("A_32")));
                rows.push(("A_41".into(), g("A_41")));
                rows.push(("A_42".into(), g("A_42")));
                rows.push(("A_4".into(), g("A_41") - g("A_42")));
                rows.push(("A_51".into(), g("A_51")));
                rows.push(("A_521".into(), g("A_521")));
                rows.push(("A_522".into(), g("A_522")));
                rows.push(("A_523".into(), g("A_523")));
                rows.push(("A_52".into(), g("A_521") + g("A_522") - g("A_523")));
                rows.push((
                    "A_5".into(),
                    g("A_51") - g("A_521") - g("A_522") + g("A_523"),
                ));
            }
            2 => {
                rows.push(("A_1".into(), g("A_1")));
                rows.push(("A_21".into(), g("A_21")));
                rows.push(("A_22".into(), g("A_22")));
                rows.push(("A_2".into(), g("A_21") - g("A_22")));
            }
            _ => rows.push(("A_1".into(), g("A_1"))),
        }
        rows.push(("A".into(), self.combined.clone()));
        rows
    }

    pub fn row(&self, name: &str) -> Option<Polynomial> {
        self.rows()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|r| r.1)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let top = (self.modulus() - 1) as u32;
        let fail = |msg: String| Err(Error::InvariantViolated(msg));
        for s in &self.subproblems {
            if !s.polynomial.is_nonnegative() {
                return fail(format!("{} has a negative coefficient", s.name));
            }
            if s.polynomial.evaluate_i64(1).to_string() != s.count {
                return fail(format!("{}: polynomial and scalar counts differ", s.name));
            }
            if !s.polynomial.is_palindromic(top) {
                return fail(format!("{} is not palindromic", s.name));
            }
        }
        let a = &self.combined;
        if !a.is_nonnegative() {
            return fail("combined enumerator has a negative coefficient".into());
        }
        if !a.coeff(0).is_one() || !a.coeff(top).is_one() || a.degree() != Some(top) {
            return fail("combined enumerator must start and end with coefficient 1".into());
        }
        if !a.is_palindromic(top) {
            return fail("combined enumerator is not palindromic".into());
        }
        if self.mode == Mode::Undirected && !a.all_exponents_even() {
            return fail("undirected enumerator has an odd exponent".into());
        }
        if self.scalar_total() != self.total() {
            return fail("scalar inclusion-exclusion disagrees with the polynomial".into());
        }
        Ok(())
    }

    pub fn self_complementary(&self) -> Result<SelfComplementaryReport> {
        let rows = self
            .rows()
            .into_iter()
            .map(|(name, poly)| Ok((name, sc_value(&poly, self.mode)?.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(SelfComplementaryReport {
            p: self.p,
            k: self.k,
            mode: self.mode,
            rows,
        })
    }
}

/// Alternating-sum substitution counting self-complementary members.
pub fn sc_value(poly: &Polynomial, mode: Mode) -> Result<BigInt> {
    match mode {
        Mode::Directed => Ok(poly.evaluate_i64(-1)),
        Mode::Undirected => poly.substitute_t2_minus1(),
    }
}

pub fn enumerate(p: u64, k: u32, mode: Mode) -> Result<SubproblemReport> {
    let specs = build_specs(p, k, mode)?;
    SubproblemReport::build(p, k, mode, &specs)
}

pub fn enumerate_p3(p: u64, mode: Mode) -> Result<SubproblemReport> {
    enumerate(p, 3, mode)
}

pub fn enumerate_p2(p: u64, mode: Mode) -> Result<SubproblemReport> {
    enumerate(p, 2, mode)
}

pub fn enumerate_prime(p: u64, mode: Mode) -> Result<Polynomial> {
    Ok(enumerate(p, 1, mode)?.combined)
}

/// Self-complementary counts per subproblem and in total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfComplementaryReport {
    pub p: u64,
    pub k: u32,
    pub mode: Mode,
    /// `(row name, count)` in table order, ending with the total `A`.
    pub rows: Vec<(String, String)>,
}

impl SelfComplementaryReport {
    pub fn get(&self, name: &str) -> Option<BigInt> {
        self.rows
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.parse().expect("decimal"))
    }

    pub fn total(&self) -> BigInt {
        self.get("A").expect("total row")
    }
}

pub fn self_complementary(p: u64, k: u32, mode: Mode) -> Result<SelfComplementaryReport> {
    enumerate(p, k, mode)?.self_complementary()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub statement: String,
    pub holds: bool,
}

/// `lhs(t) = rhs(t^p)` in `Z[t]/(t^N - 1)` with `N = p^3 - 1`.
pub fn congruent_under_eta(lhs: &Polynomial, rhs: &Polynomial, p: u64, modulus: u32) -> bool {
    lhs.cyclic_reduce(modulus) == rhs.substitute_power(p as u32).cyclic_reduce(modulus)
}

pub fn identities_from_report(report: &SubproblemReport) -> Result<Vec<IdentityCheck>> {
    if report.k != 3 {
        return Err(Error::Unsupported("identities are stated for k = 3".into()));
    }
    let p = report.p;
    let n_mod = (report.modulus() - 1) as u32;
    let r = |name: &str| report.row(name).expect("row exists");
    let at1 = |name: &str| r(name).evaluate_i64(1);
    let scalar = |name: &str, statement: String, a: &str, b: &str| IdentityCheck {
        name: name.into(),
        statement,
        holds: at1(a) == at1(b),
    };
    let cong = |name: &str, a: &str, b: &str| IdentityCheck {
        name: name.into(),
        statement: format!("{a}(t) = {b}(t^{p}) mod t^{n_mod}-1"),
        holds: congruent_under_eta(&r(a), &r(b), p, n_mod),
    };
    Ok(vec![
        scalar("i.1", "A_31(1) = A_41(1)".into(), "A_31", "A_41"),
        scalar("i.2", "A_32(1) = A_42(1)".into(), "A_32", "A_42"),
        scalar("i.3", "A_521(1) = A_522(1)".into(), "A_521", "A_522"),
        scalar("i.4", "A_3(1) = A_4(1)".into(), "A_3", "A_4"),
        cong("i.1t", "A_31", "A_41"),
        cong("i.2t", "A_32", "A_42"),
        cong("i.3t", "A_522", "A_521"),
        cong("i.4t", "A_3", "A_4"),
        cong("i.5t", "A_1", "A_1"),
        cong("i.6t", "A_523", "A_523"),
    ])
}

pub fn check_identities(p: u64, mode: Mode) -> Result<Vec<IdentityCheck>> {
    identities_from_report(&enumerate_p3(p, mode)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn p3_has_eleven_specs_covering_everything() {
        for mode in Mode::ALL {
            let specs = build_specs_p3(3, mode).unwrap();
            assert_eq!(specs.len(), 11);
            let a1 = &specs[0];
            let sizes: Vec<usize> = a1
                .components()
                .iter()
                .map(|c| c.system.num_blocks())
                .collect();
            match mode {
                Mode::Directed => assert_eq!(sizes, vec![2, 2, 2]),
                Mode::Undirected => assert_eq!(sizes, vec![1, 1, 1]),
            }
        }
    }

    #[test]
    fn even_prime_rejected() {
        assert!(matches!(
            build_specs_p3(2, Mode::Directed),
            Err(Error::InvalidPrime(2))
        ));
        assert!(matches!(
            enumerate(9, 2, Mode::Directed),
            Err(Error::InvalidPrime(9))
        ));
        assert!(enumerate(3, 4, Mode::Directed).is_err());
    }

    #[test]
    fn order_9() {
        let d = enumerate_p2(3, Mode::Directed).unwrap();
        assert_eq!(d.total(), BigInt::from(51));
        assert_eq!(d.get("A_1").unwrap().evaluate_i64(1), BigInt::from(9));
        assert_eq!(d.get("A_21").unwrap().evaluate_i64(1), BigInt::from(52));
        assert_eq!(d.get("A_22").unwrap().evaluate_i64(1), BigInt::from(10));
        assert_eq!(d.row("A_2").unwrap().evaluate_i64(1), BigInt::from(42));
        let u = enumerate_p2(3, Mode::Undirected).unwrap();
        assert_eq!(u.total(), BigInt::from(8));
        assert_eq!(u.get("A_21").unwrap().evaluate_i64(1), BigInt::from(8));
        assert_eq!(u.get("A_22").unwrap().evaluate_i64(1), BigInt::from(4));
        assert_eq!(u.get("A_1").unwrap().evaluate_i64(1), BigInt::from(4));
    }

    #[test]
    fn prime_orders() {
        // Subsets of {1,2} under x -> 2x: {}, {1,2}, and the orbit {{1},{2}}.
        assert_eq!(enumerate_prime(3, Mode::Directed).unwrap(), poly("1+t+t^2"));
        assert_eq!(enumerate_prime(3, Mode::Undirected).unwrap(), poly("1+t^2"));
        // Inverse pairs {1,4},{2,3} swapped by 2.
        assert_eq!(
            enumerate_prime(5, Mode::Undirected)
                .unwrap()
                .evaluate_i64(1),
            BigInt::from(3)
        );
    }

    #[test]
    fn order_27_undirected_spot_values() {
        let r = enumerate_p3(3, Mode::Undirected).unwrap();
        assert_eq!(r.total(), BigInt::from(928));
        assert_eq!(r.combined.coeff(14), BigInt::from(192));
        assert_eq!(r.combined.coeff(20), BigInt::from(34));
        assert_eq!(r.row("A_3").unwrap(), poly("t^20+t^18+2t^14+2t^12+t^8+t^6"));
        assert_eq!(r.row("A_4").unwrap(), poly("t^24+2t^22+t^20+t^6+2t^4+t^2"));
    }

    #[test]
    fn order_27_directed_spot_values() {
        let r = enumerate_p3(3, Mode::Directed).unwrap();
        assert_eq!(r.total(), BigInt::from(3_728_891));
        assert_eq!(r.get("A_51").unwrap().evaluate_i64(1), BigInt::from(1168));
        assert_eq!(r.combined.coeff(13), BigInt::from(577_821));
    }

    #[test]
    fn exhaustive_matches_factorized_for_independent_products() {
        for (p, mode) in [3, 5].into_iter().flat_map(|p| Mode::ALL.map(|m| (p, m))) {
            for spec in build_specs_p3(p, mode).unwrap() {
                if matches!(spec.kind(), GroupKind::IndependentProduct { .. }) {
                    assert_eq!(
                        spec.enumerate().unwrap(),
                        spec.enumerate_exhaustive().unwrap(),
                        "{} p={p} {mode}",
                        spec.name()
                    );
                }
            }
        }
    }

    #[test]
    fn self_complementary_27() {
        let d = self_complementary(3, 3, Mode::Directed).unwrap();
        assert_eq!(d.total(), BigInt::from(457));
        assert_eq!(d.get("A_21").unwrap(), BigInt::from(472));
        assert_eq!(d.get("A_523").unwrap(), BigInt::from(4));
        let u = self_complementary(3, 3, Mode::Undirected).unwrap();
        assert_eq!(u.total(), BigInt::zero());
    }

    #[test]
    fn identities_27() {
        for mode in Mode::ALL {
            let checks = check_identities(3, mode).unwrap();
            assert_eq!(checks.len(), 10);
            assert!(checks.iter().all(|c| c.holds), "{mode}: {checks:?}");
        }
    }

    #[test]
    fn identities_need_k3() {
        let r = enumerate_p2(3, Mode::Directed).unwrap();
        assert!(identities_from_report(&r).is_err());
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("u".parse::<Mode>().unwrap(), Mode::Undirected);
        assert_eq!("Directed".parse::<Mode>().unwrap(), Mode::Directed);
        assert!("x".parse::<Mode>().is_err());
    }
}
