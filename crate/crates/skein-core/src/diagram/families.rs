//! Parametric diagram families: (2, n) torus knots, pretzel knots, twist
//! knots, connected sums, and the antiparallel twist insertion that grows
//! a twist box at a positive crossing.

use std::collections::HashMap;

use super::codes::{parse_braid, realize_shadow, Shadow};
use super::{Crossing, Diagram, DiagramError, EdgeId, Sign};

/// The (2, n) torus knot as the closure of the 2-strand braid word
/// `sigma_1^n`; `n` must be odd so the closure is a knot. Positive `n`
/// gives the positive torus knot; `torus2(3)` is the positive trefoil.
pub fn torus2(n: i64) -> Result<Diagram, DiagramError> {
    if n % 2 == 0 {
        return Err(DiagramError::BadParams(format!(
            "torus2({n}) is a 2-component link; n must be odd"
        )));
    }
    let letter = if n > 0 { "1" } else { "-1" };
    let word = vec![letter; n.unsigned_abs() as usize].join(" ");
    parse_braid(&word)
}

/// Port of a band crossing: the four corners of its little square.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Corner {
    Tl,
    Tr,
    Bl,
    Br,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Port {
    band: usize,
    j: usize,
    corner: Corner,
}

/// Assigns dense edge ids to directed wires between ports.
struct Wiring {
    next: EdgeId,
    heads: HashMap<Port, EdgeId>,
    tails: HashMap<Port, EdgeId>,
}

impl Wiring {
    fn new() -> Self {
        Wiring {
            next: 0,
            heads: HashMap::new(),
            tails: HashMap::new(),
        }
    }

    fn connect(&mut self, from: Port, to: Port) {
        let e = self.next;
        self.next += 1;
        self.tails.insert(from, e);
        self.heads.insert(to, e);
    }
}

/// A vertical band of `k` crossings between two antiparallel strands: one
/// passage runs downward entering at the top-left, the other upward
/// entering at the bottom. Alternating over/under along each strand makes
/// all `k` crossings carry the band's sign.
fn band_wire_verticals(w: &mut Wiring, band: usize, k: usize) {
    let port = |j: usize, corner: Corner| Port { band, j, corner };
    for j in 1..k {
        if j % 2 == 1 {
            w.connect(port(j, Corner::Br), port(j + 1, Corner::Tr));
            w.connect(port(j + 1, Corner::Tl), port(j, Corner::Bl));
        } else {
            w.connect(port(j, Corner::Bl), port(j + 1, Corner::Tl));
            w.connect(port(j + 1, Corner::Tr), port(j, Corner::Br));
        }
    }
}

/// Emits the crossings of one band; `positive` selects which strand goes
/// over first, which is exactly the sign of every crossing in the band.
fn band_crossings(w: &Wiring, band: usize, k: usize, positive: bool, out: &mut Vec<Crossing>) {
    let port = |j: usize, corner: Corner| Port { band, j, corner };
    for j in 1..=k {
        let odd = j % 2 == 1;
        let (down_in, down_out) = if odd {
            (port(j, Corner::Tl), port(j, Corner::Br))
        } else {
            (port(j, Corner::Tr), port(j, Corner::Bl))
        };
        let (up_in, up_out) = if odd {
            (port(j, Corner::Bl), port(j, Corner::Tr))
        } else {
            (port(j, Corner::Br), port(j, Corner::Tl))
        };
        let down_is_over = positive == odd;
        let (oi, oo, ui, uo) = if down_is_over {
            (down_in, down_out, up_in, up_out)
        } else {
            (up_in, up_out, down_in, down_out)
        };
        out.push(Crossing {
            sign: if positive { Sign::Pos } else { Sign::Neg },
            over_in: w.heads[&oi],
            over_out: w.tails[&oo],
            under_in: w.heads[&ui],
            under_out: w.tails[&uo],
        });
    }
}

/// The (p, q, r) pretzel diagram: three vertical twist bands joined
/// cyclically. All parameters must be odd (and nonzero) so the result is a
/// knot; the sign of each parameter is the sign of its band's crossings.
pub fn pretzel(p: i64, q: i64, r: i64) -> Result<Diagram, DiagramError> {
    for v in [p, q, r] {
        if v == 0 || v % 2 == 0 {
            return Err(DiagramError::BadParams(format!(
                "pretzel({p},{q},{r}): parameters must be odd nonzero for a knot"
            )));
        }
    }
    let ks = [p.unsigned_abs() as usize, q.unsigned_abs() as usize, r.unsigned_abs() as usize];
    let mut w = Wiring::new();
    for (band, &k) in ks.iter().enumerate() {
        band_wire_verticals(&mut w, band, k);
    }
    // cyclic closures: top-right of each band to top-left of the next,
    // bottom-right to bottom-left
    for band in 0..3 {
        let next = (band + 1) % 3;
        w.connect(
            Port {
                band,
                j: 1,
                corner: Corner::Tr,
            },
            Port {
                band: next,
                j: 1,
                corner: Corner::Tl,
            },
        );
        w.connect(
            Port {
                band,
                j: ks[band],
                corner: Corner::Br,
            },
            Port {
                band: next,
                j: ks[next],
                corner: Corner::Bl,
            },
        );
    }
    let mut crossings = Vec::new();
    for (band, (&k, &sgn)) in ks.iter().zip(&[p, q, r]).enumerate() {
        band_crossings(&w, band, k, sgn > 0, &mut crossings);
    }
    Diagram::new(crossings, 0)
}

/// The twist knot with `j` crossings in the twist region plus a
/// 2-crossing clasp (`j + 2` crossings total): `twist_knot(1)` is a
/// trefoil, `twist_knot(2)` the figure-eight. The diagram is alternating
/// and normalized so that the twist-region crossings (indices `0..j`) are
/// positive; crossing 0 is the canonical seed for [`insert_twists`].
pub fn twist_knot(j: u32) -> Result<Diagram, DiagramError> {
    if j == 0 {
        return Err(DiagramError::BadParams(
            "twist_knot needs at least one twist crossing".into(),
        ));
    }
    let j = j as usize;
    // walk: down the twist region, through the clasp, back up the twist
    // region, and around through the clasp again
    let mut visit: Vec<usize> = Vec::with_capacity(2 * j + 4);
    visit.extend(0..j);
    visit.extend([j, j + 1]);
    visit.extend((0..j).rev());
    if j % 2 == 1 {
        visit.extend([j, j + 1]);
    } else {
        visit.extend([j + 1, j]);
    }
    let over: Vec<bool> = (0..visit.len()).map(|p| p % 2 == 0).collect();
    let d = realize_shadow(&Shadow {
        visit,
        over,
        n: j + 2,
    })?;
    // the embedding search fixes chirality arbitrarily; normalize so the
    // twist crossings are positive
    Ok(if d.crossings()[0].sign == Sign::Pos {
        d
    } else {
        d.mirror()
    })
}

/// Connected sum: cuts one edge in each diagram and cross-joins the ends.
/// For knot diagrams the result is the usual connected sum.
pub fn connected_sum(d1: &Diagram, d2: &Diagram) -> Diagram {
    // summing with a crossingless circle just absorbs it
    if d1.edge_count() == 0 || d2.edge_count() == 0 {
        let (circles, other) = if d1.edge_count() == 0 {
            (d1, d2)
        } else {
            (d2, d1)
        };
        // summing with one unknot circle is the identity; any further
        // circles ride along
        let mut out = other.clone();
        out.extra_loops += circles.extra_loops.saturating_sub(1);
        return out;
    }
    let offset = d1.edge_count();
    let mut crossings = d1.crossings().to_vec();
    crossings.extend(d2.crossings().iter().map(|c| Crossing {
        sign: c.sign,
        under_in: c.under_in + offset,
        under_out: c.under_out + offset,
        over_in: c.over_in + offset,
        over_out: c.over_out + offset,
    }));
    // swap the heads of edge 0 (in d1) and edge offset (in d2)
    let (e1, e2) = (0, offset);
    let mut head_slots = Vec::new();
    for (i, c) in crossings.iter().enumerate() {
        if c.under_in == e1 || c.under_in == e2 {
            head_slots.push((i, true));
        }
        if c.over_in == e1 || c.over_in == e2 {
            head_slots.push((i, false));
        }
    }
    debug_assert_eq!(head_slots.len(), 2);
    for (i, under) in head_slots {
        let c = &mut crossings[i];
        let slot = if under { &mut c.under_in } else { &mut c.over_in };
        *slot = if *slot == e1 { e2 } else { e1 };
    }
    let d = Diagram {
        crossings,
        n_edges: d1.edge_count() + d2.edge_count(),
        extra_loops: d1.extra_loops + d2.extra_loops,
    };
    debug_assert!(d.validate().is_ok());
    d
}

/// Applies `n` antiparallel twist moves at a positive crossing: each move
/// splices a two-crossing clasp onto the under-out / over-in strand pair,
/// growing the twist box to `2n + 1` same-sign crossings.
pub fn insert_twists(d: &Diagram, x: usize, n: u32) -> Result<Diagram, DiagramError> {
    let cx = *d
        .crossings()
        .get(x)
        .ok_or(DiagramError::InvalidCrossing(x))?;
    if cx.sign != Sign::Pos {
        return Err(DiagramError::BadParams(
            "twist insertion is defined at a positive crossing".into(),
        ));
    }
    let mut out = d.clone();
    for _ in 0..n {
        let c_edge = out.crossings[x].under_out;
        // cut the under-out edge: c keeps its tail, c_prime takes its head
        let c_mid = out.n_edges;
        let c_prime = out.n_edges + 1;
        let b_mid = out.n_edges + 2;
        let b_prime = out.n_edges + 3;
        out.n_edges += 4;
        reassign_head(&mut out, c_edge, c_prime);
        // after the reassignment the over-in edge may have been renamed
        // (this happens when under-out fed straight back into over-in)
        let b_edge = out.crossings[x].over_in;
        out.crossings[x].over_in = b_prime;
        out.crossings.push(Crossing {
            sign: Sign::Pos,
            over_in: c_edge,
            over_out: c_mid,
            under_in: b_mid,
            under_out: b_prime,
        });
        out.crossings.push(Crossing {
            sign: Sign::Pos,
            under_in: c_mid,
            under_out: c_prime,
            over_in: b_edge,
            over_out: b_mid,
        });
        debug_assert!(out.validate().is_ok());
    }
    Ok(out)
}

/// Moves the head of `edge` to `new_edge`; out-slots are untouched.
fn reassign_head(d: &mut Diagram, edge: EdgeId, new_edge: EdgeId) {
    for c in &mut d.crossings {
        if c.under_in == edge {
            c.under_in = new_edge;
            return;
        }
        if c.over_in == edge {
            c.over_in = new_edge;
            return;
        }
    }
    unreachable!("edge {edge} has a head somewhere");
}
