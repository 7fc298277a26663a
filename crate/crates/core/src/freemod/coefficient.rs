//! Exact coefficients in ℚ[μ, ν][λ, λ⁻¹].
//!
//! Rendered with `l`, `m`, `n` standing for λ, μ, ν.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CoeffError;

/// Exact rational number, always stored in lowest terms.
pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, CoeffError> {
    let bad = || CoeffError::Parse(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

fn rational_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Exponents of `λ^l μ^m ν^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub l: i32,
    pub m: u32,
    pub n: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { l: 0, m: 0, n: 0 };

    pub fn new(l: i32, m: u32, n: u32) -> Self {
        Monomial { l, m, n }
    }

    fn mul(self, o: Monomial) -> Monomial {
        Monomial {
            l: self.l + o.l,
            m: self.m + o.m,
            n: self.n + o.n,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: BTreeMap<Monomial, Rational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one() -> Self {
        Coefficient::monomial(Rational::one(), Monomial::ONE)
    }

    pub fn constant(q: Rational) -> Self {
        Coefficient::monomial(q, Monomial::ONE)
    }

    pub fn int(k: i64) -> Self {
        Coefficient::constant(Rational::from_integer(k.into()))
    }

    pub fn monomial(q: Rational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(mono, q);
        }
        Coefficient { terms }
    }

    /// `k · λ^l μ^m ν^n` with an integer factor.
    pub fn term(k: i64, l: i32, m: u32, n: u32) -> Self {
        Coefficient::monomial(Rational::from_integer(k.into()), Monomial::new(l, m, n))
    }

    pub fn lambda() -> Self {
        Coefficient::term(1, 1, 0, 0)
    }

    pub fn mu() -> Self {
        Coefficient::term(1, 0, 1, 0)
    }

    pub fn nu() -> Self {
        Coefficient::term(1, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(One::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    fn add_monomial(&mut self, mono: Monomial, q: Rational) {
        use std::collections::btree_map::Entry;
        if q.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplication by a single monomial, which never cancels.
    pub fn shift(&self, q: &Rational, mono: Monomial) -> Coefficient {
        if q.is_zero() {
            return Coefficient::zero();
        }
        Coefficient {
            terms: self.terms.iter().map(|(k, v)| (k.mul(mono), v * q)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Coefficient {
        self.shift(&Rational::from_integer(k.into()), Monomial::ONE)
    }

    pub fn pow(&self, e: u32) -> Coefficient {
        let mut acc = Coefficient::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every μ by `p`. `p` must be polynomial in λ.
    pub fn subst_mu(&self, p: &Coefficient) -> Result<Coefficient, CoeffError> {
        if p.terms.keys().any(|m| m.l < 0) {
            return Err(CoeffError::NegativeLambda);
        }
        let mut powers = vec![Coefficient::one()];
        let mut out = Coefficient::zero();
        for (mono, q) in &self.terms {
            while powers.len() <= mono.m as usize {
                let next = powers.last().unwrap() * p;
                powers.push(next);
            }
            let rest = Monomial { m: 0, ..*mono };
            out += powers[mono.m as usize].shift(q, rest);
        }
        Ok(out)
    }

    /// Substitutes numeric values for any subset of λ, μ, ν.
    pub fn eval_partial(
        &self,
        lambda: Option<&Rational>,
        mu: Option<&Rational>,
        nu: Option<&Rational>,
    ) -> Result<Coefficient, CoeffError> {
        let mut out = Coefficient::zero();
        for (mono, q) in &self.terms {
            let mut q = q.clone();
            let mut rest = *mono;
            if let Some(l0) = lambda {
                q *= rational_pow(l0, mono.l)?;
                rest.l = 0;
            }
            if let Some(m0) = mu {
                q *= rational_pow(m0, mono.m as i32)?;
                rest.m = 0;
            }
            if let Some(n0) = nu {
                q *= rational_pow(n0, mono.n as i32)?;
                rest.n = 0;
            }
            out.add_monomial(rest, q);
        }
        Ok(out)
    }

    pub fn eval(&self, lambda: &Rational, mu: &Rational, nu: &Rational) -> Result<Rational, CoeffError> {
        let c = self.eval_partial(Some(lambda), Some(mu), Some(nu))?;
        Ok(c.terms.get(&Monomial::ONE).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("coefficient serializes")
    }
}

fn rational_pow(base: &Rational, e: i32) -> Result<Rational, CoeffError> {
    if e < 0 && base.is_zero() {
        return Err(CoeffError::Pole);
    }
    Ok(num_traits::pow::Pow::pow(base, e))
}

impl Add<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (m, q) in &rhs.terms {
            self.add_monomial(*m, q.clone());
        }
    }
}

impl AddAssign<Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: Coefficient) {
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for (m, q) in rhs.terms {
            self.add_monomial(m, q);
        }
    }
}

impl Sub<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += -rhs;
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Mul<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                out.add_monomial(a.mul(*b), p * q);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $f(self, rhs: Coefficient) -> Coefficient {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_factor(out: &mut Vec<String>, var: &str, e: i64) {
    match e {
        0 => {}
        1 => out.push(var.to_string()),
        _ => out.push(format!("{var}^{e}")),
    }
}

/// Monomials in ascending `(l, m, n)` order. Inside a monomial the factors
/// with positive exponents come first (`l`, `m`, `n`), then `l^-k`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = q.abs();
            let mut factors = Vec::new();
            if mono.l > 0 {
                write_factor(&mut factors, "l", mono.l as i64);
            }
            write_factor(&mut factors, "m", mono.m as i64);
            write_factor(&mut factors, "n", mono.n as i64);
            if mono.l < 0 {
                write_factor(&mut factors, "l", mono.l as i64);
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Coefficient {
    type Err = CoeffError;

    /// Accepts the rendered form, e.g. `-m*l^-2`, `2/3*l*n + m^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoeffError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = Coefficient::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut q = Rational::one();
            let mut mono = Monomial::ONE;
            for factor in body.split('*') {
                let (var, exp) = match factor.split_once('^') {
                    Some((v, e)) => (v, e.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                match var {
                    "l" => mono.l += exp,
                    "m" | "n" if exp < 0 => return Err(bad()),
                    "m" => mono.m += exp as u32,
                    "n" => mono.n += exp as u32,
                    _ if factor.contains('^') => return Err(bad()),
                    _ => q *= parse_rational(factor).map_err(|_| bad())?,
                }
            }
            out.add_monomial(mono, if neg { -q } else { q });
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    q: String,
    l: i32,
    m: u32,
    n: u32,
}

impl Serialize for Coefficient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(mono, q)| JsonTerm {
                q: rational_pq(q),
                l: mono.l,
                m: mono.m,
                n: mono.n,
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        let mut out = Coefficient::zero();
        for t in terms {
            let q = parse_rational(&t.q).map_err(serde::de::Error::custom)?;
            out.add_monomial(Monomial::new(t.l, t.m, t.n), q);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Coefficient {
        s.parse().unwrap()
    }

    #[test]
    fn laurent_cancellation() {
        assert!((&Coefficient::lambda() * &c("l^-1")).is_one());
        assert!((&(-Coefficient::lambda()) + &Coefficient::lambda()).is_zero());
    }

    #[test]
    fn square_expansion() {
        let x = c("m - l*n");
        let sq = &x * &x;
        // hand expansion
        let expected = &(&Coefficient::term(1, 0, 2, 0) + &Coefficient::term(-2, 1, 1, 1))
            + &Coefficient::term(1, 2, 0, 2);
        assert_eq!(sq, expected);
        assert_eq!(sq, x.pow(2));
    }

    #[test]
    fn subst_examples() {
        let p = c("m - l*n");
        assert_eq!(Coefficient::mu().subst_mu(&p).unwrap(), p);
        assert_eq!(c("m^2").subst_mu(&c("m*n")).unwrap(), c("m^2*n^2"));
        assert_eq!(c("-l + m").subst_mu(&p).unwrap(), c("-l + m - l*n"));
        assert_eq!(c("l^-1").subst_mu(&c("m*l^-1")), Err(CoeffError::NegativeLambda));
    }

    #[test]
    fn eval_examples() {
        let one = Rational::one();
        let zero = Rational::zero();
        assert_eq!(c("-l").eval(&-&one, &zero, &zero).unwrap(), one);
        assert_eq!(c("-m*l^-2").eval(&one, &one, &zero).unwrap(), -&one);
        assert_eq!(c("l^-1").eval(&zero, &one, &one), Err(CoeffError::Pole));
        // partial evaluation keeps the other indeterminates
        assert_eq!(
            c("-m*l^-2").eval_partial(Some(&rational(-1, 1)), None, None).unwrap(),
            c("-m")
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(c("-m*l^-2").to_string(), "-m*l^-2");
        assert_eq!(c("l*n").to_string(), "l*n");
        assert_eq!(c("-l + m - l*n").to_string(), "m - l - l*n");
        assert_eq!(c("3/6*l^2*m + 2").to_string(), "2 + 1/2*l^2*m");
        assert_eq!(Coefficient::zero().to_string(), "0");
        assert_eq!(c("-1").to_string(), "-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "q", "m^-1", "l^", "2/0", "+", "1^2"] {
            assert!(bad.parse::<Coefficient>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn json_shape() {
        let v = c("-m*l^-2 + 1/2").to_json();
        assert_eq!(
            v,
            serde_json::json!([
                {"q": "-1/1", "l": -2, "m": 1, "n": 0},
                {"q": "1/2", "l": 0, "m": 0, "n": 0}
            ])
        );
        let back: Coefficient = serde_json::from_value(v).unwrap();
        assert_eq!(back, c("-m*l^-2 + 1/2"));
    }
}
