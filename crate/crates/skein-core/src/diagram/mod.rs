//! Oriented link diagrams and the structural operations the skein
//! computations are built on.
//!
//! A [`Diagram`] is a combinatorial object: a list of signed crossings,
//! each holding the four incident edge ids of its under- and over-passage,
//! plus a count of crossing-free circles. Every edge id occurs exactly once
//! as an incoming slot and once as an outgoing slot, which makes the
//! orientation globally consistent by construction.

mod codes;
mod families;
mod seifert;

pub use codes::{parse_braid, parse_dt, parse_gauss, parse_line, parse_pd};
pub use families::{connected_sum, insert_twists, pretzel, torus2, twist_knot};
pub use seifert::{certified_genus, seifert, GenusBound, SeifertData, SeifertGraph};

use thiserror::Error;

pub type EdgeId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cannot parse diagram code: {0}")]
    Parse(String),
    #[error("inconsistent edge incidence: {0}")]
    EdgeIncidence(String),
    #[error("code is not realizable as a planar diagram")]
    NonRealizable,
    #[error("crossing index {0} out of range")]
    InvalidCrossing(usize),
    #[error("operation requires a knot diagram, got {0} components")]
    NotAKnot(usize),
    #[error("invalid family parameters: {0}")]
    BadParams(String),
}

/// Crossing sign: `Pos` is the right-handed crossing of the skein relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// Which passage of a crossing an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Passage {
    Under,
    Over,
}

/// One crossing with its four incident edges. The under-passage runs
/// `under_in -> under_out`, the over-passage `over_in -> over_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: EdgeId,
    pub under_out: EdgeId,
    pub over_in: EdgeId,
    pub over_out: EdgeId,
}

impl Crossing {
    fn in_slots(&self) -> [EdgeId; 2] {
        [self.under_in, self.over_in]
    }

    fn out_slots(&self) -> [EdgeId; 2] {
        [self.under_out, self.over_out]
    }
}

/// An oriented link diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    n_edges: u32,
    /// Closed circles that carry no crossing (arise from smoothings).
    extra_loops: u32,
}

/// Where an edge ends (its head) or starts (its tail).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub crossing: usize,
    pub passage: Passage,
}

impl Diagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// A crossingless unlink with `k` components.
    pub fn unlink(k: u32) -> Self {
        Diagram {
            crossings: Vec::new(),
            n_edges: 0,
            extra_loops: k,
        }
    }

    /// Builds a diagram from raw crossings, validating edge incidences.
    pub fn new(crossings: Vec<Crossing>, extra_loops: u32) -> Result<Self, DiagramError> {
        let mut ids: Vec<EdgeId> = crossings
            .iter()
            .flat_map(|c| c.in_slots().into_iter().chain(c.out_slots()))
            .collect();
        ids.sort_unstable();
        ids.dedup();
        let n_edges = ids.len() as u32;
        if ids.iter().enumerate().any(|(i, &e)| e != i as u32) {
            return Err(DiagramError::EdgeIncidence(
                "edge ids must be dense 0..n".into(),
            ));
        }
        let d = Diagram {
            crossings,
            n_edges,
            extra_loops,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let n = self.n_edges as usize;
        let mut heads = vec![0u8; n];
        let mut tails = vec![0u8; n];
        for c in &self.crossings {
            for e in c.in_slots() {
                heads[e as usize] += 1;
            }
            for e in c.out_slots() {
                tails[e as usize] += 1;
            }
        }
        for e in 0..n {
            if heads[e] != 1 || tails[e] != 1 {
                return Err(DiagramError::EdgeIncidence(format!(
                    "edge {e} has {} heads and {} tails",
                    heads[e], tails[e]
                )));
            }
        }
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> u32 {
        self.n_edges
    }

    pub fn extra_loops(&self) -> u32 {
        self.extra_loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Head incidence of every edge: `head_of[e]` is where edge `e` ends.
    pub(crate) fn head_index(&self) -> Vec<Incidence> {
        let mut heads = vec![
            Incidence {
                crossing: usize::MAX,
                passage: Passage::Under
            };
            self.n_edges as usize
        ];
        for (i, c) in self.crossings.iter().enumerate() {
            heads[c.under_in as usize] = Incidence {
                crossing: i,
                passage: Passage::Under,
            };
            heads[c.over_in as usize] = Incidence {
                crossing: i,
                passage: Passage::Over,
            };
        }
        heads
    }

    /// The edge following `e` along its strand.
    fn successor(&self, heads: &[Incidence], e: EdgeId) -> EdgeId {
        let inc = heads[e as usize];
        let c = &self.crossings[inc.crossing];
        match inc.passage {
            Passage::Under => c.under_out,
            Passage::Over => c.over_out,
        }
    }

    /// Strand components as edge cycles, each starting from its lowest edge
    /// id, ordered by that id. Crossing-free circles are not included.
    pub fn components(&self) -> Vec<Vec<EdgeId>> {
        let heads = self.head_index();
        let mut seen = vec![false; self.n_edges as usize];
        let mut comps = Vec::new();
        for start in 0..self.n_edges {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            loop {
                seen[e as usize] = true;
                cycle.push(e);
                e = self.successor(&heads, e);
                if e == start {
                    break;
                }
            }
            comps.push(cycle);
        }
        comps
    }

    /// Total number of link components, including crossing-free circles.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.extra_loops as usize
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Flips every crossing sign; the diagram of the mirror image.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                sign: c.sign.flip(),
                under_in: c.over_in,
                under_out: c.over_out,
                over_in: c.under_in,
                over_out: c.under_out,
            })
            .collect();
        Diagram {
            crossings,
            n_edges: self.n_edges,
            extra_loops: self.extra_loops,
        }
    }

    /// Switches the over/under strands of one crossing.
    pub fn switch(&self, x: usize) -> Result<Self, DiagramError> {
        let mut d = self.clone();
        let c = d
            .crossings
            .get_mut(x)
            .ok_or(DiagramError::InvalidCrossing(x))?;
        *c = Crossing {
            sign: c.sign.flip(),
            under_in: c.over_in,
            under_out: c.over_out,
            over_in: c.under_in,
            over_out: c.under_out,
        };
        Ok(d)
    }

    /// The orientation-preserving smoothing: the crossing is removed and
    /// `under_in` is joined onto `over_out`, `over_in` onto `under_out`.
    pub fn smooth_oriented(&self, x: usize) -> Result<Self, DiagramError> {
        if x >= self.crossings.len() {
            return Err(DiagramError::InvalidCrossing(x));
        }
        Ok(self.remove_crossing_spliced(x))
    }

    /// The orientation-reversing smoothing used by the Kauffman relation:
    /// `under_in` is joined onto the reversed over-strand. The strand
    /// segment from `over_out` back to the crossing is reversed first,
    /// flipping the sign of every crossing it passes exactly once.
    pub fn smooth_reversing(&self, x: usize) -> Result<Self, DiagramError> {
        if x >= self.crossings.len() {
            return Err(DiagramError::InvalidCrossing(x));
        }
        let mut d = self.clone();
        let (a, b, c, dd) = {
            let cr = &d.crossings[x];
            (cr.under_in, cr.over_in, cr.under_out, cr.over_out)
        };

        // Walk forward from the over-out edge until re-entering x, recording
        // the segment to reverse.
        let heads = d.head_index();
        let mut segment = Vec::new();
        let mut e = dd;
        let arrived_at_under = loop {
            segment.push(e);
            let inc = heads[e as usize];
            if inc.crossing == x {
                match inc.passage {
                    Passage::Under => break true, // e == a
                    Passage::Over => break false, // e == b
                }
            }
            e = self.successor(&heads, e);
        };

        // Reverse the segment: swap the in/out slots of every passage
        // strictly inside it and flip signs of crossings traversed once.
        let mut visits = vec![0u8; d.crossings.len()];
        for &s in segment.iter().take(segment.len() - 1) {
            // the passage at the head of s lies inside the segment
            let inc = heads[s as usize];
            let cr = &mut d.crossings[inc.crossing];
            match inc.passage {
                Passage::Under => std::mem::swap(&mut cr.under_in, &mut cr.under_out),
                Passage::Over => std::mem::swap(&mut cr.over_in, &mut cr.over_out),
            }
            visits[inc.crossing] += 1;
        }
        for (i, &v) in visits.iter().enumerate() {
            if v == 1 {
                d.crossings[i].sign = d.crossings[i].sign.flip();
            }
        }

        // Relabel x so that the reversed strand flows in at the over-in
        // slot, then the oriented splice produces exactly the joins
        // (under_in ~ over_in) and (under_out ~ over_out) of the
        // disoriented smoothing.
        d.crossings[x] = if arrived_at_under {
            Crossing {
                sign: self.crossings[x].sign,
                under_in: b,
                under_out: c,
                over_in: dd,
                over_out: a,
            }
        } else {
            Crossing {
                sign: self.crossings[x].sign,
                under_in: a,
                under_out: c,
                over_in: dd,
                over_out: b,
            }
        };
        Ok(d.remove_crossing_spliced(x))
    }

    /// Removes crossing `x`, splicing `under_in -> over_out` and
    /// `over_in -> under_out`, contracting edge chains and counting any
    /// circle that closes up in the process.
    fn remove_crossing_spliced(&self, x: usize) -> Self {
        let heads = self.head_index();
        let cx = self.crossings[x];

        // Follow an edge through the removed crossing.
        let jump = |e: EdgeId| -> Option<EdgeId> {
            let inc = heads[e as usize];
            if inc.crossing != x {
                return None;
            }
            Some(match inc.passage {
                Passage::Under => cx.over_out,
                Passage::Over => cx.under_out,
            })
        };

        let emitted_by_x = |e: EdgeId| e == cx.under_out || e == cx.over_out;

        // Chains of old edges become single new edges.
        let mut new_id = vec![EdgeId::MAX; self.n_edges as usize];
        let mut next = 0u32;
        let mut consumed = vec![false; self.n_edges as usize];
        for e in 0..self.n_edges {
            if emitted_by_x(e) {
                continue; // not a chain start
            }
            let id = next;
            next += 1;
            new_id[e as usize] = id;
            consumed[e as usize] = true;
            let mut cur = e;
            while let Some(f) = jump(cur) {
                new_id[f as usize] = id;
                consumed[f as usize] = true;
                cur = f;
            }
        }
        // Edges emitted by x and never reached from a chain start form
        // circles through x alone.
        let mut loops = self.extra_loops;
        for e in [cx.under_out, cx.over_out] {
            if !consumed[e as usize] {
                loops += 1;
                let mut cur = e;
                loop {
                    consumed[cur as usize] = true;
                    match jump(cur) {
                        Some(f) if !consumed[f as usize] => cur = f,
                        _ => break,
                    }
                }
            }
        }

        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != x)
            .map(|(_, c)| Crossing {
                sign: c.sign,
                under_in: new_id[c.under_in as usize],
                under_out: new_id[c.under_out as usize],
                over_in: new_id[c.over_in as usize],
                over_out: new_id[c.over_out as usize],
            })
            .collect();
        Diagram {
            crossings,
            n_edges: next,
            extra_loops: loops,
        }
    }

    /// True when the crossing is a Reidemeister-I kink: one passage feeds
    /// straight into the other through a loop edge.
    pub fn is_kink(&self, x: usize) -> bool {
        let c = &self.crossings[x];
        c.under_out == c.over_in || c.over_out == c.under_in
    }

    /// Deletes a kink crossing, joining the strand through. The smoothing
    /// that respects orientation splits the loop off as a circle, so
    /// removing the kink is that smoothing minus the circle.
    pub fn remove_kink(&self, x: usize) -> Result<Self, DiagramError> {
        if !self.is_kink(x) {
            return Err(DiagramError::InvalidCrossing(x));
        }
        let mut d = self.smooth_oriented(x)?;
        debug_assert!(d.extra_loops > self.extra_loops);
        d.extra_loops -= 1;
        Ok(d)
    }

    /// Walks every component from its lowest edge id and returns the first
    /// crossing whose first visit happens on the under-strand. `None` means
    /// the diagram is descending: an unlink.
    pub fn first_undescending_crossing(&self) -> Option<usize> {
        let heads = self.head_index();
        let mut seen_edge = vec![false; self.n_edges as usize];
        let mut seen_cross = vec![false; self.crossings.len()];
        for start in 0..self.n_edges {
            if seen_edge[start as usize] {
                continue;
            }
            let mut e = start;
            loop {
                seen_edge[e as usize] = true;
                let inc = heads[e as usize];
                if !seen_cross[inc.crossing] {
                    seen_cross[inc.crossing] = true;
                    if inc.passage == Passage::Under {
                        return Some(inc.crossing);
                    }
                }
                e = self.successor(&heads, e);
                if e == start {
                    break;
                }
            }
        }
        None
    }

    /// A serialization that is invariant under edge relabeling: the
    /// lexicographically minimal walk code over all start edges and
    /// component orders, with a separator token closing each component.
    /// Two diagrams with equal codes have identical crossing structure,
    /// so equal skein invariants.
    pub fn canonical_code(&self) -> Vec<u32> {
        let heads = self.head_index();
        let comps = self.components();
        let mut best: Option<Vec<u32>> = None;
        let mut prefix = Vec::new();
        let mut state = CanonState {
            diagram: self,
            heads: &heads,
            comps: &comps,
            cross_no: vec![u32::MAX; self.crossings.len()],
            next_no: 0,
        };
        let all: Vec<usize> = (0..comps.len()).collect();
        canon_search(&mut state, &all, &mut prefix, false, &mut best);
        let mut code = best.unwrap_or_default();
        code.push(u32::MAX); // separator
        code.push(self.extra_loops);
        code
    }
}

struct CanonState<'a> {
    diagram: &'a Diagram,
    heads: &'a [Incidence],
    comps: &'a [Vec<EdgeId>],
    cross_no: Vec<u32>,
    next_no: u32,
}

/// Branch-and-bound over (component, start edge) choices; emits per passage
/// a token packing (first-visit crossing number, over?, sign). All complete
/// codes have the same length (one token per edge plus one separator per
/// component), so comparison against the incumbent can prune as soon as a
/// token exceeds it. `strictly_less` records that the prefix beat the
/// incumbent it was compared against; the incumbent may improve afterwards,
/// so the base case always re-compares in full.
fn canon_search(
    st: &mut CanonState<'_>,
    remaining: &[usize],
    prefix: &mut Vec<u32>,
    strictly_less: bool,
    best: &mut Option<Vec<u32>>,
) {
    if remaining.is_empty() {
        if best.as_ref().is_none_or(|b| prefix.as_slice() < b.as_slice()) {
            *best = Some(prefix.clone());
        }
        return;
    }
    for (ri, &ci) in remaining.iter().enumerate() {
        let comp = &st.comps[ci];
        for start_pos in 0..comp.len() {
            // walk this component from comp[start_pos]
            let saved_no = st.cross_no.clone();
            let saved_next = st.next_no;
            let len0 = prefix.len();
            let mut less = strictly_less;
            let mut pruned = false;
            let push = |prefix: &mut Vec<u32>, tok: u32, less: &mut bool| -> bool {
                prefix.push(tok);
                if !*less {
                    if let Some(b) = best.as_ref() {
                        let i = prefix.len() - 1;
                        if tok > b[i] {
                            return false;
                        }
                        if tok < b[i] {
                            *less = true;
                        }
                    }
                }
                true
            };
            for k in 0..=comp.len() {
                let tok = if k == comp.len() {
                    // close the component; without a separator, codes of
                    // different component splits could collide
                    COMPONENT_END
                } else {
                    let e = comp[(start_pos + k) % comp.len()];
                    let inc = st.heads[e as usize];
                    let c = &st.diagram.crossings[inc.crossing];
                    if st.cross_no[inc.crossing] == u32::MAX {
                        st.cross_no[inc.crossing] = st.next_no;
                        st.next_no += 1;
                    }
                    st.cross_no[inc.crossing] * 8
                        + if inc.passage == Passage::Over { 4 } else { 0 }
                        + if c.sign == Sign::Pos { 2 } else { 0 }
                };
                if !push(prefix, tok, &mut less) {
                    pruned = true;
                    break;
                }
            }
            if !pruned {
                let rest: Vec<usize> = remaining
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != ri)
                    .map(|(_, &c)| c)
                    .collect();
                canon_search(st, &rest, prefix, less, best);
            }
            prefix.truncate(len0);
            st.cross_no = saved_no;
            st.next_no = saved_next;
        }
    }
}

/// Separator token closing each component in a canonical code; larger than
/// any data token.
const COMPONENT_END: u32 = u32::MAX - 1;
