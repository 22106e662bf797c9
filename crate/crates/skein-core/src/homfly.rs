//! The skein polynomial `P` in the variables `(l, m)`, defined by
//! `P(unknot) = 1` and the relation
//!
//! ```text
//! l^-1 P(L+) + l P(L-) = -m P(L0)
//! ```
//!
//! Evaluation walks the diagram from a basepoint and rewrites the first
//! crossing met on its under-strand, branching into the switched diagram
//! (same size, closer to descending) and the smoothed one (one crossing
//! fewer). Descending diagrams are unlinks with a closed-form value, so the
//! recursion always terminates. Subresults are memoized under the
//! relabeling-invariant canonical code, with the rewrite scalars composed
//! on the way back up.

use crate::diagram::{Diagram, DiagramError, Sign};
use crate::engine::{CacheKind, EvalCtx};
use crate::poly::{Exp, Laurent2, VARS_LM};

pub use crate::engine::{SkeinCache, SkeinError, SkeinOptions, DEFAULT_NODE_BUDGET};

/// `P` of the diagram with default options.
pub fn homfly(d: &Diagram) -> Result<Laurent2, SkeinError> {
    homfly_with(d, &SkeinOptions::default())
}

/// `P` of the diagram under an explicit budget/cache configuration.
pub fn homfly_with(d: &Diagram, opts: &SkeinOptions) -> Result<Laurent2, SkeinError> {
    let mut ctx = EvalCtx::new(opts, CacheKind::Homfly);
    eval(d, &mut ctx)
}

/// The crossing-switched and orientation-preservingly smoothed diagrams at
/// one crossing; together with the input they form a skein relation triple.
pub fn skein_triple(d: &Diagram, x: usize) -> Result<(Diagram, Diagram), DiagramError> {
    Ok((d.switch(x)?, d.smooth_oriented(x)?))
}

/// `P` of the crossingless unlink with `mu` components:
/// `(-(l + l^-1) / m)^(mu-1)`.
pub fn unlink_value(mu: usize) -> Laurent2 {
    assert!(mu >= 1, "unlink needs at least one component");
    let factor = Laurent2::from_terms(VARS_LM, [(1, -1, -1i64), (-1, -1, -1)]);
    factor.pow(mu as u32 - 1)
}

fn eval(d: &Diagram, ctx: &mut EvalCtx) -> Result<Laurent2, SkeinError> {
    ctx.tick()?;
    // kinks never affect P; deleting them keeps the tree small
    let mut dekinked: Option<Diagram> = None;
    loop {
        let cur = dekinked.as_ref().unwrap_or(d);
        match (0..cur.crossing_count()).find(|&x| cur.is_kink(x)) {
            Some(x) => dekinked = Some(cur.remove_kink(x).expect("kink checked")),
            None => break,
        }
    }
    let d = dekinked.as_ref().unwrap_or(d);
    let Some(x) = d.first_undescending_crossing() else {
        return Ok(unlink_value(d.component_count()));
    };
    let key = d.canonical_code();
    if let Some(v) = ctx.lookup(&key) {
        return Ok(v);
    }
    let sign = d.crossings()[x].sign;
    let switched = eval(&d.switch(x).expect("valid crossing"), ctx)?;
    let smoothed = eval(&d.smooth_oriented(x).expect("valid crossing"), ctx)?;
    // solve the relation for the bad crossing:
    //   positive x: P(D) = -l m P0 - l^2 Psw
    //   negative x: P(D) = -l^-1 m P0 - l^-2 Psw
    let s: Exp = match sign {
        Sign::Pos => 1,
        Sign::Neg => -1,
    };
    let value = (smoothed.shift(s, 1) + switched.shift(2 * s, 0)).negate();
    ctx.store(key, &value);
    Ok(value)
}
