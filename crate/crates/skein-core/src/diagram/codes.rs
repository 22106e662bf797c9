//! Parsers for the diagram input formats: PD codes, DT codes, signed Gauss
//! codes and braid words.
//!
//! PD crossings are written `X[a,b,c,d]` with the under-strand entering at
//! `a` and leaving at `c`; the crossing is positive when the over-strand
//! runs from `b` to `d`. DT and Gauss codes determine a diagram only up to
//! overall mirror image; reconstruction picks the first planar embedding
//! found and rejects codes that admit none.

use super::{Crossing, Diagram, DiagramError, EdgeId, Sign};
use std::collections::HashMap;

/// Parses a one-line diagram description with a format prefix:
/// `pd:`, `dt:`, `gauss:` or `braid:`.
pub fn parse_line(line: &str) -> Result<Diagram, DiagramError> {
    let line = line.trim();
    if let Some(rest) = line.strip_prefix("pd:") {
        parse_pd(rest)
    } else if let Some(rest) = line.strip_prefix("dt:") {
        parse_dt(rest)
    } else if let Some(rest) = line.strip_prefix("gauss:") {
        parse_gauss(rest)
    } else if let Some(rest) = line.strip_prefix("braid:") {
        parse_braid(rest)
    } else {
        Err(DiagramError::Parse(format!(
            "unknown diagram format in `{line}`; expected pd:/dt:/gauss:/braid: prefix"
        )))
    }
}

// ---------------------------------------------------------------------------
// PD codes
// ---------------------------------------------------------------------------

/// Over-strand direction of a PD crossing: `Fwd` runs b -> d (positive).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Fwd,
    Bwd,
}

pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let quads = tokenize_pd(text)?;
    if quads.is_empty() {
        return Err(DiagramError::Parse("empty PD code".into()));
    }

    // Each label must occur exactly twice somewhere among the slots.
    let mut occ: HashMap<i64, Vec<(usize, usize)>> = HashMap::new();
    for (x, q) in quads.iter().enumerate() {
        for (slot, &lab) in q.iter().enumerate() {
            occ.entry(lab).or_default().push((x, slot));
        }
    }
    for (lab, places) in &occ {
        if places.len() != 2 {
            return Err(DiagramError::EdgeIncidence(format!(
                "label {lab} occurs {} times, expected 2",
                places.len()
            )));
        }
    }

    // Decide each crossing's over-strand direction. Slot 0 is always a
    // head (under-in) and slot 2 a tail (under-out); slots 1 and 3 depend
    // on the direction. Each label needs exactly one head and one tail.
    let mut dir: Vec<Option<Dir>> = vec![None; quads.len()];
    // role of an occurrence: Some(true)=head, Some(false)=tail, None=depends
    let role = |d: Option<Dir>, slot: usize| -> Option<bool> {
        match slot {
            0 => Some(true),
            2 => Some(false),
            1 => d.map(|d| d == Dir::Fwd),
            3 => d.map(|d| d == Dir::Bwd),
            _ => unreachable!(),
        }
    };
    let force = |slot: usize, want_head: bool| -> Dir {
        match (slot, want_head) {
            (1, true) | (3, false) => Dir::Fwd,
            (1, false) | (3, true) => Dir::Bwd,
            _ => unreachable!(),
        }
    };

    // Propagate constraints to a fixed point, seeding undetermined
    // crossings by the numeric successor convention (labels increase along
    // each strand, wrapping at the maximum).
    loop {
        let mut progress = false;
        for places in occ.values() {
            let [(x1, s1), (x2, s2)] = [places[0], places[1]];
            let r1 = role(dir[x1], s1);
            let r2 = role(dir[x2], s2);
            match (r1, r2) {
                (Some(a), Some(b)) => {
                    if a == b {
                        return Err(DiagramError::EdgeIncidence(format!(
                            "label {} is a {} at both occurrences",
                            quads[x1][s1],
                            if a { "head" } else { "tail" }
                        )));
                    }
                }
                (Some(a), None) => {
                    dir[x2] = Some(force(s2, !a));
                    progress = true;
                }
                (None, Some(b)) => {
                    dir[x1] = Some(force(s1, !b));
                    progress = true;
                }
                (None, None) => {}
            }
        }
        if progress {
            continue;
        }
        match dir.iter().position(|d| d.is_none()) {
            None => break,
            Some(x) => {
                let (b, d) = (quads[x][1], quads[x][3]);
                dir[x] = Some(if d == b + 1 || (b > d && d != b - 1) {
                    Dir::Fwd
                } else {
                    Dir::Bwd
                });
            }
        }
    }

    // Relabel to dense edge ids and build crossings.
    let mut labels: Vec<i64> = occ.keys().copied().collect();
    labels.sort_unstable();
    let id: HashMap<i64, EdgeId> = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as EdgeId))
        .collect();
    let crossings = quads
        .iter()
        .zip(&dir)
        .map(|(q, d)| {
            let (over_in, over_out, sign) = match d.unwrap() {
                Dir::Fwd => (q[1], q[3], Sign::Pos),
                Dir::Bwd => (q[3], q[1], Sign::Neg),
            };
            Crossing {
                sign,
                under_in: id[&q[0]],
                under_out: id[&q[2]],
                over_in: id[&over_in],
                over_out: id[&over_out],
            }
        })
        .collect();
    Diagram::new(crossings, 0)
}

fn tokenize_pd(text: &str) -> Result<Vec<[i64; 4]>, DiagramError> {
    let mut quads = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(open) = rest.find('[') else {
            return Err(DiagramError::Parse(format!(
                "expected `X[...]`, found `{rest}`"
            )));
        };
        let head = rest[..open].trim();
        if !head.eq_ignore_ascii_case("x") {
            return Err(DiagramError::Parse(format!(
                "expected crossing tag `X`, found `{head}`"
            )));
        }
        let Some(close) = rest[open..].find(']') else {
            return Err(DiagramError::Parse("unterminated `[`".into()));
        };
        let inner = &rest[open + 1..open + close];
        let nums: Result<Vec<i64>, _> = inner
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect();
        let nums = nums.map_err(|_| DiagramError::Parse(format!("bad PD entries `{inner}`")))?;
        let quad: [i64; 4] = nums
            .try_into()
            .map_err(|_| DiagramError::Parse(format!("crossing `{inner}` needs 4 entries")))?;
        quads.push(quad);
        rest = rest[open + close + 1..].trim_start_matches([' ', ',', ';']).trim_start();
    }
    Ok(quads)
}

// ---------------------------------------------------------------------------
// Braid words
// ---------------------------------------------------------------------------

/// Parses a braid word as signed generator indices (`"1 1 1"` is the
/// positive trefoil; a leading `σ` or `s` per letter is accepted) and
/// returns its closure. Positive generators are positive crossings.
pub fn parse_braid(text: &str) -> Result<Diagram, DiagramError> {
    let mut word = Vec::new();
    for tok in text.split([' ', ',', '\t']).filter(|t| !t.is_empty()) {
        let t = tok.trim_start_matches(['σ', 's']);
        let g: i32 = t
            .parse()
            .map_err(|_| DiagramError::Parse(format!("bad braid letter `{tok}`")))?;
        if g == 0 {
            return Err(DiagramError::Parse("braid generator 0 is invalid".into()));
        }
        word.push(g);
    }
    if word.is_empty() {
        return Err(DiagramError::Parse("empty braid word".into()));
    }
    let strands = word.iter().map(|g| g.unsigned_abs() + 1).max().unwrap() as usize;

    let mut next_edge: EdgeId = 0;
    let mut fresh = || {
        let e = next_edge;
        next_edge += 1;
        e
    };
    let start: Vec<EdgeId> = (0..strands).map(|_| fresh()).collect();
    let mut cur = start.clone();
    let mut crossings = Vec::new();
    for &g in &word {
        let i = (g.unsigned_abs() - 1) as usize;
        let n1 = fresh();
        let n2 = fresh();
        // positive generator: the strand at position i crosses over
        let c = if g > 0 {
            Crossing {
                sign: Sign::Pos,
                over_in: cur[i],
                over_out: n2,
                under_in: cur[i + 1],
                under_out: n1,
            }
        } else {
            Crossing {
                sign: Sign::Neg,
                over_in: cur[i + 1],
                over_out: n1,
                under_in: cur[i],
                under_out: n2,
            }
        };
        crossings.push(c);
        cur[i] = n1;
        cur[i + 1] = n2;
    }

    // Close the braid: identify each final edge with the matching start
    // edge. Untouched strands become crossing-free circles.
    let mut loops = 0;
    let mut rename: HashMap<EdgeId, EdgeId> = HashMap::new();
    for i in 0..strands {
        if cur[i] == start[i] {
            loops += 1;
        } else {
            rename.insert(cur[i], start[i]);
        }
    }
    for c in &mut crossings {
        for e in [&mut c.under_out, &mut c.over_out] {
            if let Some(&r) = rename.get(e) {
                *e = r;
            }
        }
    }
    // compact edge ids
    let mut used: Vec<EdgeId> = crossings
        .iter()
        .flat_map(|c| [c.under_in, c.under_out, c.over_in, c.over_out])
        .collect();
    used.sort_unstable();
    used.dedup();
    let dense: HashMap<EdgeId, EdgeId> = used
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as EdgeId))
        .collect();
    for c in &mut crossings {
        c.under_in = dense[&c.under_in];
        c.under_out = dense[&c.under_out];
        c.over_in = dense[&c.over_in];
        c.over_out = dense[&c.over_out];
    }
    Diagram::new(crossings, loops)
}

// ---------------------------------------------------------------------------
// DT and Gauss codes: reconstruction via planar embedding search
// ---------------------------------------------------------------------------

/// A knot shadow as a closed walk: `visit[p]` names the crossing passed at
/// position `p` and `over[p]` tells whether that passage goes over.
pub(super) struct Shadow {
    pub(super) visit: Vec<usize>,
    pub(super) over: Vec<bool>,
    pub(super) n: usize,
}

/// Parses a Dowker-Thistlethwaite code: the even labels paired with odd
/// positions 1, 3, 5, ..., one signed integer each. A negative entry means
/// the even-numbered passage goes over.
pub fn parse_dt(text: &str) -> Result<Diagram, DiagramError> {
    let entries: Result<Vec<i64>, _> = text
        .split([' ', ',', '\t'])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>())
        .collect();
    let entries = entries.map_err(|_| DiagramError::Parse(format!("bad DT code `{text}`")))?;
    let n = entries.len();
    if n == 0 {
        return Err(DiagramError::Parse("empty DT code".into()));
    }
    let mut seen = vec![false; n];
    for &a in &entries {
        let v = a.unsigned_abs();
        if a == 0 || v % 2 != 0 || v > 2 * n as u64 {
            return Err(DiagramError::Parse(format!(
                "DT entry {a} out of range for {n} crossings"
            )));
        }
        let idx = (v / 2 - 1) as usize;
        if seen[idx] {
            return Err(DiagramError::Parse(format!("duplicate DT entry {a}")));
        }
        seen[idx] = true;
    }

    // positions 0..2n-1 (0-based); odd 1-based position 2i+1 -> index 2i
    let mut visit = vec![usize::MAX; 2 * n];
    let mut over = vec![false; 2 * n];
    for (i, &a) in entries.iter().enumerate() {
        let odd_pos = 2 * i;
        let even_pos = (a.unsigned_abs() - 1) as usize; // 0-based
        visit[odd_pos] = i;
        visit[even_pos] = i;
        // positive entry: odd passage over, even passage under
        over[odd_pos] = a > 0;
        over[even_pos] = a < 0;
    }
    realize_shadow(&Shadow { visit, over, n })
}

/// Parses a signed Gauss code: `k` for an over-passage of crossing `k`,
/// `-k` for an under-passage; every crossing appears once each way.
pub fn parse_gauss(text: &str) -> Result<Diagram, DiagramError> {
    let entries: Result<Vec<i64>, _> = text
        .split([' ', ',', '\t'])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>())
        .collect();
    let entries = entries.map_err(|_| DiagramError::Parse(format!("bad Gauss code `{text}`")))?;
    if entries.is_empty() || entries.len() % 2 != 0 {
        return Err(DiagramError::Parse(
            "Gauss code must list 2n nonzero entries".into(),
        ));
    }
    let n = entries.len() / 2;
    let mut label_of: HashMap<u64, usize> = HashMap::new();
    let mut count = vec![[0usize; 2]; n];
    let mut visit = Vec::with_capacity(2 * n);
    let mut over = Vec::with_capacity(2 * n);
    for &a in &entries {
        if a == 0 {
            return Err(DiagramError::Parse("Gauss entry 0 is invalid".into()));
        }
        let next = label_of.len();
        let id = *label_of.entry(a.unsigned_abs()).or_insert(next);
        if id >= n {
            return Err(DiagramError::Parse(format!(
                "more than {n} distinct crossings in Gauss code"
            )));
        }
        count[id][usize::from(a > 0)] += 1;
        visit.push(id);
        over.push(a > 0);
    }
    if count.iter().any(|c| *c != [1, 1]) {
        return Err(DiagramError::Parse(
            "each Gauss label must occur once over and once under".into(),
        ));
    }
    realize_shadow(&Shadow { visit, over, n })
}

/// Cap on the embedding search: 2^(c-1) handedness assignments are tried.
const MAX_REALIZE_CROSSINGS: usize = 24;

/// Finds a planar embedding of the shadow by searching over the local
/// handedness of every crossing and certifying genus 0 by face count
/// (V - E + F = 2). The first embedding found fixes the diagram; the code
/// determines it only up to mirror image anyway.
pub(super) fn realize_shadow(shadow: &Shadow) -> Result<Diagram, DiagramError> {
    let n = shadow.n;
    if n > MAX_REALIZE_CROSSINGS {
        return Err(DiagramError::Parse(format!(
            "DT/Gauss reconstruction is limited to {MAX_REALIZE_CROSSINGS} crossings"
        )));
    }
    // the two positions at which each crossing is visited
    let mut pos = vec![(usize::MAX, usize::MAX); n];
    for (p, &x) in shadow.visit.iter().enumerate() {
        if pos[x].0 == usize::MAX {
            pos[x].0 = p;
        } else {
            pos[x].1 = p;
        }
    }

    // Darts: 4 per crossing, ordered counterclockwise. With handedness +1
    // the rotation is (A_in, B_in, A_out, B_out), with -1 the B slots swap.
    // A is the first passage, B the second. Each position p has an
    // incoming arc (p-1) and outgoing arc p; arcs are the future edges.
    let two_n = 2 * n;
    let arc_dart = |p: usize, hand: &[bool]| -> (u32, u32) {
        // returns (tail dart, head dart) of arc p: from position p to p+1
        let q = (p + 1) % two_n;
        let xt = shadow.visit[p];
        let xh = shadow.visit[q];
        let t_first = pos[xt].0 == p;
        let h_first = pos[xh].0 == q;
        // dart slot of "out" for passage A is 2; for B it is 3 (hand +) / 1 (hand -)
        let t_slot = if t_first {
            2
        } else if hand[xt] {
            3
        } else {
            1
        };
        // dart slot of "in" for A is 0; for B it is 1 (hand +) / 3 (hand -)
        let h_slot = if h_first {
            0
        } else if hand[xh] {
            1
        } else {
            3
        };
        ((4 * xt + t_slot) as u32, (4 * xh + h_slot) as u32)
    };

    let faces = |hand: &[bool]| -> usize {
        // involution: twin dart across each arc
        let mut twin = vec![u32::MAX; 4 * n];
        for p in 0..two_n {
            let (t, h) = arc_dart(p, hand);
            twin[t as usize] = h;
            twin[h as usize] = t;
        }
        // next dart in face: rotate the twin counterclockwise
        let mut seen = vec![false; 4 * n];
        let mut count = 0;
        for d0 in 0..4 * n as u32 {
            if seen[d0 as usize] {
                continue;
            }
            count += 1;
            let mut d = d0;
            while !seen[d as usize] {
                seen[d as usize] = true;
                let t = twin[d as usize];
                d = (t & !3) + ((t + 1) & 3);
            }
        }
        count
    };

    let mut hand = vec![false; n];
    // first crossing's handedness fixed: the other choice gives the mirror
    hand[0] = true;
    let found = (0..(1u64 << (n.saturating_sub(1)))).any(|mask| {
        for (i, h) in hand.iter_mut().enumerate().skip(1) {
            *h = mask >> (i - 1) & 1 == 1;
        }
        faces(&hand) == n + 2
    });
    if !found {
        return Err(DiagramError::NonRealizable);
    }

    // Build the diagram: arc p is edge p; passage A of crossing x runs
    // in-edge (pos.0 - 1) -> out-edge pos.0, passage B likewise.
    let crossings = (0..n)
        .map(|x| {
            let (pa, pb) = pos[x];
            let a_in = ((pa + two_n - 1) % two_n) as EdgeId;
            let a_out = pa as EdgeId;
            let b_in = ((pb + two_n - 1) % two_n) as EdgeId;
            let b_out = pb as EdgeId;
            let a_over = shadow.over[pa];
            // sign: with rotation (A_in, B_in, A_out, B_out) CCW, an
            // over-running A gives a positive crossing
            let sign = if a_over == hand[x] {
                Sign::Pos
            } else {
                Sign::Neg
            };
            if a_over {
                Crossing {
                    sign,
                    over_in: a_in,
                    over_out: a_out,
                    under_in: b_in,
                    under_out: b_out,
                }
            } else {
                Crossing {
                    sign,
                    under_in: a_in,
                    under_out: a_out,
                    over_in: b_in,
                    over_out: b_out,
                }
            }
        })
        .collect();
    Diagram::new(crossings, 0)
}
