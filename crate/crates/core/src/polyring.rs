//! Univariate polynomials in `t` with arbitrary-precision integer coefficients.
//!
//! The exponent of `t` always stands for a valency, so every generating
//! function in the crate is a [`Polynomial`]. [`CyclicPolynomial`] is the image
//! of a polynomial in the quotient ring `Z[t] / (t^N - 1)`; it is a separate
//! type so that reduced and unreduced values cannot be compared by accident.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sparse polynomial: exponent -> non-zero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exponent: u32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { terms }
    }

    /// `1 + t^w`, the contribution of one orbit of total weight `w`.
    pub fn one_plus_power(w: u32) -> Self {
        let mut p = Self::one();
        p.add_term(w, BigInt::one());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficient list, index = exponent.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as u32, c)))
    }

    fn add_term(&mut self, exponent: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exponent: u32) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Non-zero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense coefficients from `t^0` up to the degree.
    pub fn to_dense(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut out = vec![BigInt::zero(); deg as usize + 1];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Divides every coefficient by `divisor`, or returns `None` if any
    /// coefficient is not a multiple of it.
    pub fn div_exact(&self, divisor: &BigInt) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(divisor);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*e, q);
        }
        Some(Self { terms })
    }

    /// Multiplies in place by `1 + t^w`.
    pub fn mul_one_plus_power(&mut self, w: u32) {
        if w == 0 {
            for c in self.terms.values_mut() {
                *c *= 2;
            }
            return;
        }
        let shifted: Vec<(u32, BigInt)> =
            self.terms.iter().map(|(e, c)| (e + w, c.clone())).collect();
        for (e, c) in shifted {
            self.add_term(e, c);
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `t` by `t^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        assert!(m >= 1, "substitute_power needs m >= 1");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
        }
    }

    pub fn cyclic_reduce(&self, modulus: u32) -> CyclicPolynomial {
        CyclicPolynomial::from_polynomial(self, modulus)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        // Horner over the dense range, skipping gaps with powers.
        let mut acc = BigInt::zero();
        let mut prev: Option<u32> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(pe) = prev {
                acc *= x.pow(pe - e);
            }
            acc += c;
            prev = Some(*e);
        }
        if let Some(pe) = prev {
            acc *= x.pow(pe);
        }
        acc
    }

    pub fn evaluate_i64(&self, x: i64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// Value after substituting `t^2 := -1`; every exponent must be even.
    pub fn substitute_t2_minus1(&self) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e % 2 == 1 {
                return Err(Error::OddExponent(*e));
            }
            if (e / 2) % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        Ok(acc)
    }

    pub fn is_palindromic(&self, degree: u32) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| *e <= degree && self.coeff(degree - e) == *c)
    }

    pub fn all_exponents_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Rendering with the highest power first, e.g. `t^4+2t^2+1`.
    pub fn to_descending_string(&self) -> String {
        self.to_string()
    }
}

/// `prod_w (1 + t^w)` over the given orbit weights.
pub fn product_one_plus_powers(weights: &[u32]) -> Polynomial {
    let total: u32 = weights.iter().sum();
    let mut dense = vec![BigInt::zero(); total as usize + 1];
    dense[0] = BigInt::one();
    let mut top = 0usize;
    for &w in weights {
        let w = w as usize;
        if w == 0 {
            for c in dense.iter_mut().take(top + 1) {
                *c *= 2;
            }
            continue;
        }
        for i in (w..=top + w).rev() {
            let low = dense[i - w].clone();
            dense[i] += low;
        }
        top += w;
    }
    Polynomial::from_coeffs(dense)
}

fn mul_dense(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let deg = a.degree().unwrap() + b.degree().unwrap();
    let mut acc = vec![BigInt::zero(); deg as usize + 1];
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            acc[(ea + eb) as usize] += ca * cb;
        }
    }
    Polynomial::from_coeffs(acc)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        mul_dense(self, rhs)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        mul_dense(&self, &rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Self {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (u32, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if negative {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        match e {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if e == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(e, c)| (*e, c)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts sums of terms such as `t^{26}+3t^25 - 2t + 1`. Braces and
    /// whitespace are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::zero();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    negative = !negative;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &cleaned[start..i];
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (coeff, exponent) = parse_term(term)?;
            out.add_term(exponent, if negative { -coeff } else { coeff });
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(BigInt, u32)> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    match term.find('t') {
        None => Ok((term.parse::<BigInt>().map_err(|_| bad())?, 0)),
        Some(pos) => {
            let coeff_part = term[..pos].trim_end_matches('*');
            let coeff = if coeff_part.is_empty() {
                BigInt::one()
            } else {
                coeff_part.parse::<BigInt>().map_err(|_| bad())?
            };
            let rest = &term[pos + 1..];
            let exponent = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<u32>()
                    .map_err(|_| bad())?
            };
            Ok((coeff, exponent))
        }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Polynomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from decimal exponent strings to decimal coefficient strings")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Polynomial, A::Error> {
                use serde::de::Error as _;
                let mut p = Polynomial::zero();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let e: u32 = k
                        .parse()
                        .map_err(|_| A::Error::custom(format!("bad exponent {k:?}")))?;
                    let c: BigInt = v
                        .parse()
                        .map_err(|_| A::Error::custom(format!("bad coefficient {v:?}")))?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

/// Element of `Z[t] / (t^N - 1)`: all exponents lie in `0..N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicPolynomial {
    modulus: u32,
    terms: BTreeMap<u32, BigInt>,
}

impl CyclicPolynomial {
    pub fn from_polynomial(p: &Polynomial, modulus: u32) -> Self {
        assert!(modulus >= 1, "cyclic modulus must be positive");
        let mut reduced = Polynomial::zero();
        for (e, c) in &p.terms {
            reduced.add_term(e % modulus, c.clone());
        }
        Self {
            modulus,
            terms: reduced.terms,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeff(&self, exponent: u32) -> BigInt {
        self.terms
            .get(&(exponent % self.modulus))
            .cloned()
            .unwrap_or_default()
    }

    /// Canonical representative with exponents in `0..N`.
    pub fn lift(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.clone(),
        }
    }

    /// `t -> t^m` inside the quotient ring.
    pub fn substitute_power(&self, m: u32) -> Self {
        let n = self.modulus as u64;
        let lifted = Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (((*e as u64 * m as u64) % n) as u32, c.clone())),
        );
        Self {
            modulus: self.modulus,
            terms: lifted.terms,
        }
    }
}

impl fmt::Display for CyclicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(e, c)| (*e, c)))?;
        write!(f, " (mod t^{} - 1)", self.modulus)
    }
}

impl fmt::Debug for CyclicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_terms() {
        assert_eq!(&p("t^2+1") + &p("t^2-1"), p("2t^2"));
        assert_eq!(&p("t^3+t") + &Polynomial::zero(), p("t^3+t"));
        assert_eq!((&p("t^2+1") + &p("-t^2-1")).num_terms(), 0);
    }

    #[test]
    fn sub_examples() {
        let a = p("t^5+2t");
        assert!((&a - &a).is_zero());
        assert_eq!(&p("t^2+3") - &p("t"), p("t^2-t+3"));
        assert_eq!(
            &Polynomial::constant(52) - &Polynomial::constant(10),
            Polynomial::constant(42)
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("1+t^2") * &p("1+t^24"), p("1+t^2+t^24+t^26"));
        let f1 = p("1+t^2").pow(13);
        assert_eq!(f1.coeff(12), BigInt::from(1716));
        assert_eq!(f1.evaluate_i64(1), BigInt::from(8192));
        assert_eq!(&p("3t^4+t") * &Polynomial::one(), p("3t^4+t"));
    }

    #[test]
    fn mul_one_plus_power_matches_mul() {
        let a = p("2t^3-t+5");
        for w in 0..5 {
            let mut b = a.clone();
            b.mul_one_plus_power(w);
            let expected = if w == 0 {
                a.scale(&BigInt::from(2))
            } else {
                &a * &Polynomial::one_plus_power(w)
            };
            assert_eq!(b, expected);
        }
    }

    #[test]
    fn substitute_and_reduce() {
        assert_eq!(p("t^2").substitute_power(3), p("t^6"));
        assert_eq!(Polynomial::one().substitute_power(7), Polynomial::one());
        assert_eq!(p("t^26").cyclic_reduce(26).lift(), Polynomial::one());
        assert_eq!(
            p("t^78+1").cyclic_reduce(26).lift(),
            Polynomial::constant(2)
        );
    }

    #[test]
    fn eta_on_a4_gives_a3_for_undirected_27() {
        let a4 = p("t^24+2t^22+t^20+t^6+2t^4+t^2");
        let a3 = p("t^20+t^18+2t^14+2t^12+t^8+t^6");
        assert_eq!(
            a4.substitute_power(3).cyclic_reduce(26),
            a3.cyclic_reduce(26)
        );
        let cyc = a4.cyclic_reduce(26);
        assert_eq!(
            cyc.substitute_power(3)
                .substitute_power(3)
                .substitute_power(3),
            cyc
        );
    }

    #[test]
    fn evaluation() {
        let a = p("t^4+3t^3+t+1");
        assert_eq!(a.evaluate_i64(1), BigInt::from(6));
        assert_eq!(a.evaluate_i64(-1), BigInt::from(-2));
        assert_eq!(a.evaluate_i64(2), BigInt::from(16 + 24 + 2 + 1));
        assert_eq!(Polynomial::zero().evaluate_i64(17), BigInt::zero());
    }

    #[test]
    fn t2_minus_one_substitution() {
        assert_eq!(p("1+t^4").substitute_t2_minus1().unwrap(), BigInt::from(2));
        assert_eq!(p("1+t^2").substitute_t2_minus1().unwrap(), BigInt::zero());
        assert_eq!(
            p("t^3+1").substitute_t2_minus1(),
            Err(Error::OddExponent(3))
        );
    }

    #[test]
    fn parse_and_display() {
        let a = p("t^{26}+3t^{25}+23t^{24}+t+1");
        assert_eq!(a.to_string(), "t^26+3t^25+23t^24+t+1");
        assert_eq!(p("-t^2 + 5").to_string(), "-t^2+5");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!("t^".parse::<Polynomial>().is_err());
        assert!("3+".parse::<Polynomial>().is_err());
    }

    #[test]
    fn json_is_ordered_by_exponent() {
        let a = p("5t^10+t^2+7");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"0":"7","2":"1","10":"5"}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert_eq!(p("6t^2+3").div_exact(&BigInt::from(3)), Some(p("2t^2+1")));
        assert_eq!(p("6t^2+4").div_exact(&BigInt::from(3)), None);
    }
}
