//! Sparse bivariate Laurent polynomials with exact integer coefficients.
//!
//! [`Laurent2`] houses both the skein polynomial `P` (variables `l`, `m`)
//! and the Kauffman polynomial `F` (variables `a`, `z`). Coefficients are
//! arbitrary-precision integers, so repeated multiplication by factors like
//! `(l^2+1)^k` can never overflow. The zero polynomial is the empty term
//! map, and no stored coefficient is ever zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exponent of a single variable. Spans stay small even for census-scale
/// inputs, so a fixed-width exponent is safe; coefficients are the part
/// that grows.
pub type Exp = i32;

/// Which of the two variables an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// Variable pair for polynomials in `(l, m)`.
pub const VARS_LM: (char, char) = ('l', 'm');
/// Variable pair for polynomials in `(a, z)`.
pub const VARS_AZ: (char, char) = ('a', 'z');

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable mismatch: ({0}, {1}) vs ({2}, {3})")]
    VarMismatch(char, char, char, char),
    #[error("degrees of the zero polynomial are undefined")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("non-exact division, remainder {remainder}")]
    NonExactDivision { remainder: Box<Laurent2> },
    #[error("evaluation at zero is undefined for Laurent polynomials")]
    ZeroEvalPoint,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Minimal degree, maximal degree and span of one variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub min: Exp,
    pub max: Exp,
    pub span: Exp,
}

/// A sparse Laurent polynomial in two named variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent2 {
    vars: (char, char),
    terms: BTreeMap<(Exp, Exp), BigInt>,
}

impl Laurent2 {
    pub fn zero(vars: (char, char)) -> Self {
        Laurent2 {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: (char, char)) -> Self {
        Self::monomial(vars, (0, 0), BigInt::one())
    }

    pub fn monomial(vars: (char, char), exps: (Exp, Exp), coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Laurent2 { vars, terms }
    }

    pub fn constant(vars: (char, char), c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, (0, 0), c)
    }

    /// Builds a polynomial from `(e1, e2, coefficient)` triples, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I, C>(vars: (char, char), iter: I) -> Self
    where
        I: IntoIterator<Item = (Exp, Exp, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e1, e2, c) in iter {
            p.add_term((e1, e2), c.into());
        }
        p
    }

    pub fn vars(&self) -> (char, char) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in `(e1, e2)`-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((Exp, Exp), &BigInt)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    fn add_term(&mut self, exps: (Exp, Exp), c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VarMismatch(
                self.vars.0, self.vars.1, other.vars.0, other.vars.1,
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, -v.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_vars(rhs)?;
        let mut out = Self::zero(self.vars);
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                out.add_term((a1 + b1, a2 + b2), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        let terms = self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect();
        Laurent2 {
            vars: self.vars,
            terms,
        }
    }

    pub fn scalar_mul(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * &c)).collect();
        Laurent2 {
            vars: self.vars,
            terms,
        }
    }

    /// Multiplies by the monomial `x1^e1 * x2^e2`.
    pub fn shift(&self, e1: Exp, e2: Exp) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), v)| ((a + e1, b + e2), v.clone()))
            .collect();
        Laurent2 {
            vars: self.vars,
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The coefficient of `x1^e1 * x2^e2`; zero when absent.
    pub fn coeff(&self, e1: Exp, e2: Exp) -> BigInt {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    /// The polynomial coefficient of `x_var^k`, as a polynomial in the
    /// remaining variable (the extracted variable appears with exponent 0).
    pub fn coeff_in_var(&self, var: Var, k: Exp) -> Self {
        let mut out = Self::zero(self.vars);
        for (&(e1, e2), c) in &self.terms {
            match var {
                Var::First if e1 == k => out.add_term((0, e2), c.clone()),
                Var::Second if e2 == k => out.add_term((e1, 0), c.clone()),
                _ => {}
            }
        }
        out
    }

    fn exp_of(key: (Exp, Exp), var: Var) -> Exp {
        match var {
            Var::First => key.0,
            Var::Second => key.1,
        }
    }

    /// Minimal degree, maximal degree and span in one variable.
    /// Undefined (an error) for the zero polynomial.
    pub fn degrees(&self, var: Var) -> Result<Degrees, PolyError> {
        let mut it = self.terms.keys().map(|&k| Self::exp_of(k, var));
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?;
        let (min, max) = it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e)));
        Ok(Degrees {
            min,
            max,
            span: max - min,
        })
    }

    pub fn mindeg(&self, var: Var) -> Result<Exp, PolyError> {
        Ok(self.degrees(var)?.min)
    }

    pub fn maxdeg(&self, var: Var) -> Result<Exp, PolyError> {
        Ok(self.degrees(var)?.max)
    }

    /// Largest absolute value among the coefficients; zero for the zero
    /// polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Exact division: returns `q` with `q * d == self`, or an error
    /// carrying a nonzero remainder witness when no such `q` exists.
    pub fn exact_div(&self, d: &Self) -> Result<Self, PolyError> {
        self.check_vars(d)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        // Shift both operands into the ordinary-polynomial cone so that
        // lex leading-term cancellation terminates.
        let mp = self.componentwise_min();
        let md = d.componentwise_min();
        let p0 = self.shift(-mp.0, -mp.1);
        let d0 = d.shift(-md.0, -md.1);

        let (&ltd, cd) = d0.terms.iter().next_back().expect("divisor is nonzero");
        let mut rem = p0;
        let mut quot = Self::zero(self.vars);
        while !rem.is_zero() {
            let (&ltr, cr) = rem.terms.iter().next_back().expect("checked nonzero");
            let fail = |rem: Laurent2| PolyError::NonExactDivision {
                remainder: Box::new(rem.shift(mp.0, mp.1)),
            };
            if ltr.0 < ltd.0 || ltr.1 < ltd.1 {
                return Err(fail(rem));
            }
            let (c, r) = num_integer::Integer::div_rem(cr, cd);
            if !r.is_zero() {
                return Err(fail(rem));
            }
            let t = Self::monomial(self.vars, (ltr.0 - ltd.0, ltr.1 - ltd.1), c);
            rem = &rem - &(&t * &d0);
            quot = &quot + &t;
        }
        Ok(quot.shift(mp.0 - md.0, mp.1 - md.1))
    }

    fn componentwise_min(&self) -> (Exp, Exp) {
        let mut it = self.terms.keys();
        let &(a, b) = it.next().expect("nonzero polynomial");
        it.fold((a, b), |(x, y), &(u, v)| (x.min(u), y.min(v)))
    }

    /// Exact rational evaluation at a nonzero point.
    pub fn eval_rational(
        &self,
        x1: &BigRational,
        x2: &BigRational,
    ) -> Result<BigRational, PolyError> {
        if x1.is_zero() || x2.is_zero() {
            return Err(PolyError::ZeroEvalPoint);
        }
        let mut acc = BigRational::zero();
        for (&(e1, e2), c) in &self.terms {
            let t = rat_pow(x1, e1) * rat_pow(x2, e2) * BigRational::from_integer(c.clone());
            acc += t;
        }
        Ok(acc)
    }

    /// Negates every exponent of the chosen variable. For the skein
    /// polynomial in `(l, m)` this maps `P(K)` to `P` of the mirror image.
    pub fn conjugate_var(&self, var: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(e1, e2), c)| {
                let k = match var {
                    Var::First => (-e1, e2),
                    Var::Second => (e1, -e2),
                };
                (k, c.clone())
            })
            .collect();
        Laurent2 {
            vars: self.vars,
            terms,
        }
    }

    /// `l <-> l^-1` conjugation (first variable).
    pub fn conjugate_l(&self) -> Self {
        self.conjugate_var(Var::First)
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        if text == "0" {
            return Err(PolyError::Parse(
                "bare zero has no variable names; use zero(vars)".into(),
            ));
        }
        let mut vars: Option<(char, char)> = None;
        let mut out: Option<Laurent2> = None;
        for term in text.split(" + ") {
            let mut parts = term.split('*');
            let coeff_s = parts
                .next()
                .ok_or_else(|| PolyError::Parse(format!("bad term `{term}`")))?;
            let coeff: BigInt = coeff_s
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient `{coeff_s}`")))?;
            let (v1, e1) = parse_power(
                parts
                    .next()
                    .ok_or_else(|| PolyError::Parse(format!("missing first power in `{term}`")))?,
            )?;
            let (v2, e2) = parse_power(
                parts
                    .next()
                    .ok_or_else(|| PolyError::Parse(format!("missing second power in `{term}`")))?,
            )?;
            if parts.next().is_some() {
                return Err(PolyError::Parse(format!("trailing factors in `{term}`")));
            }
            match vars {
                None => vars = Some((v1, v2)),
                Some(vs) if vs == (v1, v2) => {}
                Some(vs) => {
                    return Err(PolyError::VarMismatch(vs.0, vs.1, v1, v2));
                }
            }
            let p = out.get_or_insert_with(|| Laurent2::zero(vars.unwrap()));
            p.add_term((e1, e2), coeff);
        }
        out.ok_or_else(|| PolyError::Parse("no terms".into()))
    }
}

fn parse_power(s: &str) -> Result<(char, Exp), PolyError> {
    let mut chars = s.chars();
    let v = chars
        .next()
        .ok_or_else(|| PolyError::Parse(format!("empty power in `{s}`")))?;
    let e = chars
        .as_str()
        .strip_prefix('^')
        .ok_or_else(|| PolyError::Parse(format!("missing `^` in `{s}`")))?
        .parse()
        .map_err(|_| PolyError::Parse(format!("bad exponent in `{s}`")))?;
    Ok((v, e))
}

fn rat_pow(x: &BigRational, e: Exp) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Canonical text form: terms in `(e1, e2)`-lexicographic order, each as
/// `c*x^a*y^b`, joined by ` + `. This exact rendering is the census
/// serialization and round-trips through [`Laurent2::parse`].
impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (v1, v2) = self.vars;
        let mut first = true;
        for (&(e1, e2), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*{v1}^{e1}*{v2}^{e2}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent2({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try_method:ident) => {
        impl $trait for &Laurent2 {
            type Output = Laurent2;
            fn $method(self, rhs: &Laurent2) -> Laurent2 {
                self.$try_method(rhs)
                    .expect("operands have the same variables")
            }
        }
        impl $trait for Laurent2 {
            type Output = Laurent2;
            fn $method(self, rhs: Laurent2) -> Laurent2 {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        self.negate()
    }
}

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(terms: &[(Exp, Exp, i64)]) -> Laurent2 {
        Laurent2::from_terms(VARS_LM, terms.iter().copied())
    }

    /// The skein polynomial of the positive trefoil, used as a fixture
    /// throughout: l^2 m^2 - l^4 - 2 l^2.
    fn trefoil_p() -> Laurent2 {
        lm(&[(2, 2, 1), (4, 0, -1), (2, 0, -2)])
    }

    #[test]
    fn difference_of_squares() {
        let p = lm(&[(1, 0, 1), (0, 0, 1)]);
        let q = lm(&[(1, 0, 1), (0, 0, -1)]);
        assert_eq!(&p * &q, lm(&[(2, 0, 1), (0, 0, -1)]));
    }

    #[test]
    fn additive_identity() {
        let p = trefoil_p();
        assert_eq!(&p + &Laurent2::zero(VARS_LM), p);
    }

    #[test]
    fn monomial_inverse() {
        let p = Laurent2::monomial(VARS_LM, (2, 1), 1);
        let q = Laurent2::monomial(VARS_LM, (-2, -1), 1);
        assert!((&p * &q).is_one());
    }

    #[test]
    fn var_mismatch_is_an_error() {
        let p = Laurent2::one(VARS_LM);
        let q = Laurent2::one(VARS_AZ);
        assert!(matches!(p.try_add(&q), Err(PolyError::VarMismatch(..))));
        assert!(matches!(p.try_mul(&q), Err(PolyError::VarMismatch(..))));
    }

    #[test]
    fn coeff_extraction() {
        let p = trefoil_p();
        assert_eq!(p.coeff(2, 2), BigInt::from(1));
        assert_eq!(p.coeff(4, 0), BigInt::from(-1));
        assert_eq!(p.coeff(7, 7), BigInt::zero());
        assert_eq!(Laurent2::zero(VARS_LM).coeff(0, 0), BigInt::zero());
        // [P]_{m^0} = -l^4 - 2l^2
        assert_eq!(
            p.coeff_in_var(Var::Second, 0),
            lm(&[(4, 0, -1), (2, 0, -2)])
        );
        // [P]_{m^2} = l^2
        assert_eq!(p.coeff_in_var(Var::Second, 2), lm(&[(2, 0, 1)]));
    }

    #[test]
    fn degrees_of_trefoil() {
        let p = trefoil_p();
        assert_eq!(
            p.degrees(Var::First).unwrap(),
            Degrees {
                min: 2,
                max: 4,
                span: 2
            }
        );
        assert_eq!(
            p.degrees(Var::Second).unwrap(),
            Degrees {
                min: 0,
                max: 2,
                span: 2
            }
        );
    }

    #[test]
    fn degrees_of_constant_and_zero() {
        let one = Laurent2::one(VARS_LM);
        assert_eq!(
            one.degrees(Var::First).unwrap(),
            Degrees {
                min: 0,
                max: 0,
                span: 0
            }
        );
        assert_eq!(
            Laurent2::zero(VARS_LM).degrees(Var::First),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn exact_div_by_l_plus_linv() {
        let d = lm(&[(1, 0, 1), (-1, 0, 1)]); // l + l^-1
        // (-l^3 - l) / (l + l^-1) = -l^2
        let p = lm(&[(3, 0, -1), (1, 0, -1)]);
        assert_eq!(p.exact_div(&d).unwrap(), lm(&[(2, 0, -1)]));
        // ((-l^2) - 1) / (l + l^-1) = -l
        let p = lm(&[(2, 0, -1), (0, 0, -1)]);
        assert_eq!(p.exact_div(&d).unwrap(), lm(&[(1, 0, -1)]));
    }

    #[test]
    fn non_exact_division_reports_remainder() {
        let d = lm(&[(1, 0, 1), (-1, 0, 1)]);
        let p = lm(&[(1, 0, 1), (0, 0, 1)]); // l + 1
        match p.exact_div(&d) {
            Err(PolyError::NonExactDivision { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected non-exact division, got {other:?}"),
        }
    }

    #[test]
    fn division_by_zero() {
        let p = trefoil_p();
        assert_eq!(
            p.exact_div(&Laurent2::zero(VARS_LM)),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn eval_trefoil_identity_point() {
        // P(2, -5/2) = 4*(25/4) - 16 - 8 = 1
        let p = trefoil_p();
        let x = BigRational::from_integer(2.into());
        let y = BigRational::new((-5).into(), 2.into());
        assert_eq!(p.eval_rational(&x, &y).unwrap(), BigRational::one());
    }

    #[test]
    fn eval_constant_and_zero_point() {
        let one = Laurent2::one(VARS_LM);
        let two = BigRational::from_integer(2.into());
        assert_eq!(one.eval_rational(&two, &two).unwrap(), BigRational::one());
        let p = trefoil_p();
        assert_eq!(
            p.eval_rational(&BigRational::zero(), &two),
            Err(PolyError::ZeroEvalPoint)
        );
    }

    #[test]
    fn conjugate_l_negates_first_exponents() {
        let p = trefoil_p();
        let c = p.conjugate_l();
        assert_eq!(c, lm(&[(-2, 2, 1), (-4, 0, -1), (-2, 0, -2)]));
        assert_eq!(c.conjugate_l(), p);
    }

    #[test]
    fn canonical_text_round_trip() {
        let p = trefoil_p();
        let s = p.to_string();
        assert_eq!(s, "-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0");
        assert_eq!(Laurent2::parse(&s).unwrap(), p);
        assert_eq!(Laurent2::zero(VARS_LM).to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Laurent2::parse("").is_err());
        assert!(Laurent2::parse("1*l^2").is_err());
        assert!(Laurent2::parse("x*l^2*m^0").is_err());
        assert!(matches!(
            Laurent2::parse("1*l^0*m^0 + 1*a^0*z^0"),
            Err(PolyError::VarMismatch(..))
        ));
    }

    // Randomized ring-axiom and division checks. A small deterministic
    // LCG keeps the suite reproducible without extra dependencies.
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 >> 33
        }
        fn range(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }

    fn random_poly(rng: &mut Lcg, max_terms: usize) -> Laurent2 {
        let n = rng.range(0, max_terms as i64) as usize;
        Laurent2::from_terms(
            VARS_LM,
            (0..n).map(|_| {
                (
                    rng.range(-4, 4) as Exp,
                    rng.range(-4, 4) as Exp,
                    rng.range(-9, 9),
                )
            }),
        )
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut rng = Lcg(0x5eed);
        for _ in 0..200 {
            let p = random_poly(&mut rng, 6);
            let q = random_poly(&mut rng, 6);
            let r = random_poly(&mut rng, 6);
            assert_eq!(&p + &q, &q + &p);
            assert_eq!(&p * &q, &q * &p);
            assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            assert_eq!(&p - &p, Laurent2::zero(VARS_LM));
        }
    }

    #[test]
    fn exact_div_inverts_multiplication() {
        let mut rng = Lcg(0xd1f ^ 0xbeef);
        for _ in 0..200 {
            let p = random_poly(&mut rng, 5);
            let d = random_poly(&mut rng, 4);
            if d.is_zero() {
                continue;
            }
            let prod = &p * &d;
            assert_eq!(prod.exact_div(&d).unwrap(), p);
        }
    }

    #[test]
    fn conjugate_is_ring_homomorphism() {
        let mut rng = Lcg(42);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 5);
            let q = random_poly(&mut rng, 5);
            assert_eq!((&p + &q).conjugate_l(), &p.conjugate_l() + &q.conjugate_l());
            assert_eq!((&p * &q).conjugate_l(), &p.conjugate_l() * &q.conjugate_l());
            assert_eq!(p.conjugate_l().conjugate_l(), p);
        }
    }

    #[test]
    fn mindeg_of_product_adds() {
        let mut rng = Lcg(7);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 5);
            let q = random_poly(&mut rng, 5);
            if p.is_zero() || q.is_zero() {
                continue;
            }
            for var in [Var::First, Var::Second] {
                let dp = p.degrees(var).unwrap();
                let dq = q.degrees(var).unwrap();
                let dpq = (&p * &q).degrees(var).unwrap();
                assert_eq!(dpq.min, dp.min + dq.min);
                assert_eq!(dpq.max, dp.max + dq.max);
            }
        }
    }

    #[test]
    fn round_trip_randomized() {
        let mut rng = Lcg(99);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 8);
            if p.is_zero() {
                continue;
            }
            assert_eq!(Laurent2::parse(&p.to_string()).unwrap(), p);
        }
    }
}
