//! Degree data of the polynomials and every inequality derived from it:
//! the Morton-Franks-Williams braid index bound, Morton's genus bound, the
//! Legendrian `tb + |mu|` bounds for a knot and its mirror, the Bennequin
//! slack, the twist-box extension formula, the coefficient-boundedness
//! experiment, and the comparison of the Kauffman and skein bounds.

use num_bigint::BigInt;
use num_rational::Rational64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{seifert, Diagram};
use crate::engine::{SkeinError, SkeinOptions};
use crate::homfly::homfly_with;
use crate::poly::{Exp, Laurent2, PolyError, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bounds are undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("knot polynomial required: negative m-degrees belong to links")]
    LinkPolynomial,
    #[error("twist extension divisibility violated (implementation bug): {0}")]
    TwistDivision(PolyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

/// Degree data and derived bounds of one knot's polynomials.
///
/// Rational fields stay rational; callers take ceilings when comparing to
/// integer invariants. In JSON they serialize as strings (`"2"`, `"5/2"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub mindeg_l: Exp,
    pub maxdeg_l: Exp,
    pub span_l: Exp,
    pub maxdeg_m: Exp,
    /// From the Kauffman polynomial, when it was computed.
    pub maxdeg_a: Option<Exp>,
    /// `span_l / 2 + 1 <= b(K)`.
    #[serde(with = "ratio_string")]
    pub mfw_lower: Rational64,
    /// `maxdeg_m / 2 <= weak genus`.
    #[serde(with = "ratio_string")]
    pub morton_genus_lower: Rational64,
    /// `tb + |mu| <= mindeg_l P - 1` for this orientation.
    pub tau_prime_upper: i64,
    /// The same bound for the mirror image.
    pub tau_prime_upper_mirror: i64,
    /// `(2g - 1) - (tb + |mu|)`, when Legendrian data and a certified
    /// genus are available.
    pub bennequin_slack: Option<i64>,
    /// `-maxdeg_a F <= mindeg_l P`, when F is available.
    pub pf_holds: Option<bool>,
}

mod ratio_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        let mut parts = text.splitn(2, '/');
        let numer: i64 = parts
            .next()
            .unwrap_or_default()
            .parse()
            .map_err(D::Error::custom)?;
        let denom: i64 = match parts.next() {
            Some(q) => q.parse().map_err(D::Error::custom)?,
            None => 1,
        };
        if denom == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational64::new(numer, denom))
    }
}

impl BoundsReport {
    /// Flat `key=value` rendering, one field per line; absent optional
    /// fields are omitted.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let mut push = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        push("mindeg_l", self.mindeg_l.to_string());
        push("maxdeg_l", self.maxdeg_l.to_string());
        push("span_l", self.span_l.to_string());
        push("maxdeg_m", self.maxdeg_m.to_string());
        if let Some(a) = self.maxdeg_a {
            push("maxdeg_a", a.to_string());
        }
        push("mfw_lower", self.mfw_lower.to_string());
        push("morton_genus_lower", self.morton_genus_lower.to_string());
        push("tau_prime_upper", self.tau_prime_upper.to_string());
        push("tau_prime_upper_mirror", self.tau_prime_upper_mirror.to_string());
        if let Some(b) = self.bennequin_slack {
            push("bennequin_slack", b.to_string());
        }
        if let Some(p) = self.pf_holds {
            push("pf_holds", p.to_string());
        }
        out
    }
}

/// Externally supplied invariants of a Legendrian representative; nothing
/// in this crate computes them from geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianDatum {
    pub tb: i64,
    pub mu: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BennequinSlacks {
    /// `(2g - 1) - (tb + |mu|)` from Bennequin's inequality.
    pub bi_slack: i64,
    /// `(mindeg_l P - 1) - (tb + |mu|)` from the skein bound.
    pub tbm_slack: i64,
}

impl BennequinSlacks {
    /// Negative slacks mean the supplied `(tb, mu)` pair is inconsistent
    /// with the invariants; callers should warn, not abort.
    pub fn consistent(&self) -> bool {
        self.bi_slack >= 0 && self.tbm_slack >= 0
    }
}

/// Fills a report from the skein polynomial of a knot and optionally its
/// Kauffman polynomial.
pub fn bounds_report(p: &Laurent2, f: Option<&Laurent2>) -> Result<BoundsReport, BoundsError> {
    if p.is_zero() {
        return Err(BoundsError::ZeroPolynomial);
    }
    let dm = p.degrees(Var::Second).expect("nonzero");
    if dm.min < 0 {
        return Err(BoundsError::LinkPolynomial);
    }
    let dl = p.degrees(Var::First).expect("nonzero");
    let maxdeg_a = match f {
        Some(f) if f.is_zero() => return Err(BoundsError::ZeroPolynomial),
        Some(f) => Some(f.degrees(Var::First).expect("nonzero").max),
        None => None,
    };
    Ok(BoundsReport {
        mindeg_l: dl.min,
        maxdeg_l: dl.max,
        span_l: dl.span,
        maxdeg_m: dm.max,
        maxdeg_a,
        mfw_lower: Rational64::new(dl.span as i64, 2) + 1,
        morton_genus_lower: Rational64::new(dm.max as i64, 2),
        tau_prime_upper: dl.min as i64 - 1,
        tau_prime_upper_mirror: -(dl.max as i64) - 1,
        bennequin_slack: None,
        pf_holds: maxdeg_a.map(|ma| -(ma as i64) <= dl.min as i64),
    })
}

/// Slack of Bennequin's inequality and of the skein bound for one
/// Legendrian datum against a genus and skein polynomial. Passing the
/// slice genus instead of the Seifert genus yields the sharper slice
/// variant of the same arithmetic; no genus is computed here.
pub fn bennequin_check(
    datum: LegendrianDatum,
    genus: i64,
    p: &Laurent2,
) -> Result<BennequinSlacks, BoundsError> {
    let mindeg_l = p.degrees(Var::First).map_err(|_| BoundsError::ZeroPolynomial)?.min;
    let lhs = datum.tb + datum.mu.abs();
    Ok(BennequinSlacks {
        bi_slack: (2 * genus - 1) - lhs,
        tbm_slack: (mindeg_l as i64 - 1) - lhs,
    })
}

/// Extends a skein pair across `n` antiparallel twists at a positive
/// crossing:
///
/// ```text
/// P_(2n+1) = ((-l^2)^n - 1)/(l + l^-1) * m * P_inf + (-l^2)^n * P_1
/// ```
///
/// The division is always exact; a failure would be an implementation bug
/// and is surfaced as [`BoundsError::TwistDivision`].
pub fn twist_extend(p1: &Laurent2, pinf: &Laurent2, n: u32) -> Result<Laurent2, BoundsError> {
    let vars = p1.vars();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let neg_l2_n = Laurent2::monomial(vars, (2 * n as Exp, 0), sign);
    let numer = &neg_l2_n - &Laurent2::one(vars);
    let denom = Laurent2::from_terms(vars, [(1, 0, 1i64), (-1, 0, 1)]);
    let quot = numer.exact_div(&denom).map_err(BoundsError::TwistDivision)?;
    Ok(&quot.shift(0, 1) * pinf + &neg_l2_n * p1)
}

/// One row of the coefficient-boundedness experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessRow {
    pub member: usize,
    pub crossings: usize,
    pub genus: i64,
    /// Largest |coefficient| of `(l^2+1)^k * P`.
    pub max_abs_coeff: BigInt,
    pub span_l: Exp,
}

/// Computes, for each member of a diagram family sharing at most `k` twist
/// regions, the maximal absolute coefficient of `(l^2+1)^k * P` and the
/// `l`-span of `P`. Across a fixed-genus twist family the first column
/// stays bounded while the span grows.
pub fn finiteness_experiment(
    family: &[Diagram],
    k: u32,
    opts: &SkeinOptions,
) -> Result<Vec<FinitenessRow>, BoundsError> {
    let mut rows = Vec::with_capacity(family.len());
    for (member, d) in family.iter().enumerate() {
        let p = homfly_with(d, opts)?;
        let vars = p.vars();
        let factor = Laurent2::from_terms(vars, [(2, 0, 1i64), (0, 0, 1)]).pow(k);
        let blown = &factor * &p;
        let span_l = p
            .degrees(Var::First)
            .map_err(|_| BoundsError::ZeroPolynomial)?
            .span;
        rows.push(FinitenessRow {
            member,
            crossings: d.crossing_count(),
            genus: seifert(d).genus,
            max_abs_coeff: blown.max_abs_coeff(),
            span_l,
        });
    }
    Ok(rows)
}

/// The comparison `-maxdeg_a F <= mindeg_l P` for one orientation.
pub fn pf_check(p: &Laurent2, f: &Laurent2) -> Result<bool, BoundsError> {
    let mindeg_l = p.degrees(Var::First).map_err(|_| BoundsError::ZeroPolynomial)?.min;
    let maxdeg_a = f.degrees(Var::First).map_err(|_| BoundsError::ZeroPolynomial)?.max;
    Ok(-(maxdeg_a as i64) <= mindeg_l as i64)
}

/// A knot fails when the inequality fails for it or for its mirror image
/// (mirroring conjugates both polynomials).
pub fn pf_fails(p: &Laurent2, f: &Laurent2) -> Result<bool, BoundsError> {
    let here = pf_check(p, f)?;
    let mirror = pf_check(&p.conjugate_l(), &f.conjugate_var(Var::First))?;
    Ok(!(here && mirror))
}
