//! The two-variable Kauffman polynomial `F` in `(a, z)`.
//!
//! `F(D) = a^(-w(D)) * Lambda(D)`, where `Lambda` is the regular-isotopy
//! invariant with `Lambda(unknot) = 1`, the unoriented relation
//!
//! ```text
//! Lambda(L+) + Lambda(L-) = z (Lambda(L0) + Lambda(Loo))
//! ```
//!
//! and a positive/negative kink multiplying `Lambda` by `a` / `a^-1`.
//! `Lambda` forgets orientation; the evaluation keeps an orientation choice
//! only to drive the descending template, reversing strand segments as the
//! disoriented smoothing demands. A descending diagram is an unlink with
//! kinks, worth `a^writhe * delta^(components-1)` with
//! `delta = (a + a^-1)/z - 1`.

use crate::diagram::{Diagram, DiagramError};
use crate::engine::{CacheKind, EvalCtx};
use crate::poly::{Exp, Laurent2, PolyError, Var, VARS_AZ};

pub use crate::engine::{SkeinCache, SkeinError, SkeinOptions};

/// `F` of the diagram with default options.
pub fn kauffman(d: &Diagram) -> Result<Laurent2, SkeinError> {
    kauffman_with(d, &SkeinOptions::default())
}

/// `F = a^(-w) * Lambda` under an explicit configuration.
pub fn kauffman_with(d: &Diagram, opts: &SkeinOptions) -> Result<Laurent2, SkeinError> {
    let w = writhe_exp(d);
    Ok(lambda_with(d, opts)?.shift(-w, 0))
}

/// The regular-isotopy polynomial `Lambda`.
pub fn lambda(d: &Diagram) -> Result<Laurent2, SkeinError> {
    lambda_with(d, &SkeinOptions::default())
}

pub fn lambda_with(d: &Diagram, opts: &SkeinOptions) -> Result<Laurent2, SkeinError> {
    let mut ctx = EvalCtx::new(opts, CacheKind::KauffmanLambda);
    eval(d, &mut ctx)
}

/// The four diagrams of the Kauffman relation at one crossing, besides the
/// input itself: (switched, oriented smoothing, disoriented smoothing).
pub fn kauffman_quad(
    d: &Diagram,
    x: usize,
) -> Result<(Diagram, Diagram, Diagram), DiagramError> {
    Ok((d.switch(x)?, d.smooth_oriented(x)?, d.smooth_reversing(x)?))
}

/// Maximal `a`-degree of a Kauffman polynomial; the Legendrian bound reads
/// `tb(K) <= -maxdeg_a F(K) - 1`.
pub fn maxdeg_a(f: &Laurent2) -> Result<Exp, PolyError> {
    f.maxdeg(Var::First)
}

/// `delta = (a + a^-1 - z) / z`: the value of one extra unknot component.
pub fn delta() -> Laurent2 {
    Laurent2::from_terms(VARS_AZ, [(1, -1, 1i64), (-1, -1, 1), (0, 0, -1)])
}

fn writhe_exp(d: &Diagram) -> Exp {
    Exp::try_from(d.writhe()).expect("writhe fits in an exponent")
}

fn eval(d: &Diagram, ctx: &mut EvalCtx) -> Result<Laurent2, SkeinError> {
    ctx.tick()?;
    // strip kinks first: each contributes a bare factor a^sign
    let mut dekinked: Option<Diagram> = None;
    let mut kink_exp: Exp = 0;
    loop {
        let cur = dekinked.as_ref().unwrap_or(d);
        match (0..cur.crossing_count()).find(|&x| cur.is_kink(x)) {
            Some(x) => {
                kink_exp += cur.crossings()[x].sign.value() as Exp;
                dekinked = Some(cur.remove_kink(x).expect("kink checked"));
            }
            None => break,
        }
    }
    let d = dekinked.as_ref().unwrap_or(d);
    let value = match d.first_undescending_crossing() {
        None => {
            // unlink with kinks: a^w delta^(mu - 1)
            let mu = d.component_count() as u32;
            delta().pow(mu - 1).shift(writhe_exp(d), 0)
        }
        Some(x) => {
            let key = d.canonical_code();
            match ctx.lookup(&key) {
                Some(v) => v,
                None => {
                    let switched = eval(&d.switch(x).expect("valid crossing"), ctx)?;
                    let oriented = eval(&d.smooth_oriented(x).expect("valid crossing"), ctx)?;
                    let reversed = eval(&d.smooth_reversing(x).expect("valid crossing"), ctx)?;
                    // Lambda(D) = z (Lambda(A) + Lambda(B)) - Lambda(switched)
                    let value = (oriented + reversed).shift(0, 1) - switched;
                    ctx.store(key, &value);
                    value
                }
            }
        }
    };
    Ok(value.shift(kink_exp, 0))
}
