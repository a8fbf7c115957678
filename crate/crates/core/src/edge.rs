//! Enumeration of connected bipartite edge subgraphs.
//!
//! Solutions are edge subsets `F` whose subgraph is connected and bipartite,
//! emitted as sorted edge-id lists. The search tree mirrors the induced
//! variant: each node holds an `F` (emitted on entry) plus a sorted candidate
//! list `ne` of alive non-`F` edges sharing a vertex with `F`. Candidates are
//! consumed smallest-first; after a candidate's subtree is exhausted it stays
//! deleted for its siblings, which makes the emitted subsets pairwise
//! distinct without any dedup table.
//!
//! Processing one candidate `e` splits into three reversible phases:
//! - **delete** `e` from the working graph (persists for later siblings);
//! - **cover**: if `e` reaches a vertex `w` outside `V(F)`, give `w` the
//!   color opposite its attaching endpoint and delete every alive edge both
//!   of whose endpoints now share a color (those can never join any deeper
//!   `F`: they would close an odd cycle);
//! - **extend**: put `e` into `F` and splice `w`'s edges toward uncolored
//!   vertices into `ne`.
//!
//! The cover phase is *not* undone when the child returns. Consecutive
//! siblings frequently reach the same `w` with the same color, so the work
//! is kept as long as the next candidate would rebuild it identically (and
//! no deleted conflict edge precedes that candidate, which would reorder the
//! scan); otherwise it is rolled back before the next candidate runs. This
//! deferred rollback is what brings the amortized cost per solution down to
//! a constant number of elementary edits.
//!
//! Data-structure layout: each edge has one *slot* per endpoint; each vertex
//! files the slots of its alive incident edges into three intrusive lists by
//! the color of the far endpoint (uncolored / color 1 / color 2), so both
//! conflict detection and splicing are pure list walks. A global sorted
//! doubly-linked list holds `ne`. Every edit lands on an undo log that
//! backtracking replays in reverse.

use crate::counter::OpCounter;
use crate::graph::Graph;
use crate::{EnumOptions, EnumStats, SolutionSink, StopEnumeration};

const NIL: usize = usize::MAX;

/// Which of its vertex's three lists a slot is filed under: the far
/// endpoint's color at filing time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FarColor {
    Uncolored = 0,
    Color1 = 1,
    Color2 = 2,
}

impl FarColor {
    fn of(label: u8) -> FarColor {
        match label {
            0 => FarColor::Uncolored,
            1 => FarColor::Color1,
            2 => FarColor::Color2,
            _ => unreachable!("labels are 0, 1 or 2"),
        }
    }
}

fn opposite(label: u8) -> u8 {
    debug_assert!(label == 1 || label == 2);
    3 - label
}

#[derive(Debug, Clone, Copy)]
enum Edit {
    NeUnlink { e: usize },
    NeInsert { e: usize, old_prev: usize, old_next: usize },
    SlotUnlink { slot: usize },
    SlotMove { slot: usize, old_kind: FarColor, old_prev: usize, old_next: usize },
    SetAlive { e: usize },
    SetInNe { e: usize, old: bool },
    SetInF { e: usize, old: bool },
    SetLabel { v: usize, old: u8 },
}

/// A cover phase kept alive past its own candidate: vertex `w` was colored
/// `label` and the conflict edges (minimum id `conflict_min`) deleted, with
/// the log already at `mark` beforehand. `killed_len` marks how many of the
/// level's candidate deletions predate it, so a rollback can replay the
/// later ones.
#[derive(Debug, Clone, Copy)]
struct PendingCover {
    mark: usize,
    killed_len: usize,
    w: usize,
    label: u8,
    conflict_min: usize,
}

/// Full copy of the mutable structure, for restore-exactness checks.
#[derive(Debug, Clone, PartialEq)]
struct Snapshot {
    slot_prev: Vec<usize>,
    slot_next: Vec<usize>,
    slot_kind: Vec<FarColor>,
    heads: [Vec<usize>; 3],
    ne_prev: Vec<usize>,
    ne_next: Vec<usize>,
    ne_head: usize,
    in_ne: Vec<bool>,
    alive: Vec<bool>,
    in_f: Vec<bool>,
    label: Vec<u8>,
    members_sorted: Vec<usize>,
}

struct State<'g> {
    graph: &'g Graph,

    // Slot lists: slots 2e (at the smaller endpoint) and 2e+1 (at the
    // larger), filed per vertex by far-endpoint color.
    slot_prev: Vec<usize>,
    slot_next: Vec<usize>,
    slot_kind: Vec<FarColor>,
    heads: [Vec<usize>; 3],

    // Global candidate list over edge ids, sorted ascending.
    ne_prev: Vec<usize>,
    ne_next: Vec<usize>,
    ne_head: usize,
    in_ne: Vec<bool>,

    alive: Vec<bool>,
    in_f: Vec<bool>,
    /// 0 = uncolored, 1/2 = bipartition colors.
    label: Vec<u8>,

    /// Current solution (edge ids), kept sorted for emission.
    members_sorted: Vec<usize>,

    log: Vec<Edit>,
    peak_log: usize,
    counter: OpCounter,

    /// Reusable buffer for conflict-list walks (killing invalidates them).
    scratch: Vec<usize>,

    check: bool,
    fault_armed: bool,
}

/// One level of the explicit depth-first stack.
struct Level {
    /// Log length right after this level was entered.
    entry_mark: usize,
    /// Log length before the running child's extend edits.
    pre_extend_mark: usize,
    /// Edge whose addition created this level (the root edge for a root
    /// level — only used where a parent exists).
    chosen: usize,
    /// Candidates deleted at this level, in processing order.
    killed: Vec<usize>,
    /// Cover phase kept alive for reuse by the next sibling, if any.
    pending: Option<PendingCover>,
}

impl<'g> State<'g> {
    fn new(graph: &'g Graph, options: &EnumOptions) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let mut state = State {
            graph,
            slot_prev: vec![NIL; 2 * m],
            slot_next: vec![NIL; 2 * m],
            slot_kind: vec![FarColor::Uncolored; 2 * m],
            heads: [vec![NIL; n], vec![NIL; n], vec![NIL; n]],
            ne_prev: vec![NIL; m],
            ne_next: vec![NIL; m],
            ne_head: NIL,
            in_ne: vec![false; m],
            alive: vec![true; m],
            in_f: vec![false; m],
            label: vec![0; n],
            members_sorted: Vec::new(),
            log: Vec::new(),
            peak_log: 0,
            counter: OpCounter::default(),
            scratch: Vec::new(),
            check: options.check_invariants,
            fault_armed: options.fault_skip_odd_edge,
        };

        // Uncolored lists in ascending edge-id order (adjacency is sorted by
        // neighbor, which for a fixed vertex coincides with edge-id order).
        for v in 0..n {
            for &(_, e) in graph.neighbors(v).iter().rev() {
                let slot = slot_at(graph, e, v);
                state.slot_next[slot] = state.heads[FarColor::Uncolored as usize][v];
                state.slot_prev[slot] = NIL;
                if state.slot_next[slot] != NIL {
                    state.slot_prev[state.slot_next[slot]] = slot;
                }
                state.heads[FarColor::Uncolored as usize][v] = slot;
            }
        }
        state
    }

    /// Number of array cells of persistent mutable state: three slot arrays
    /// (2m each), the candidate links and three per-edge flag arrays (m
    /// each), three head arrays and the color array (n each).
    fn live_units(&self) -> usize {
        11 * self.graph.edge_count() + 4 * self.graph.vertex_count()
    }

    fn push_log(&mut self, edit: Edit) {
        self.log.push(edit);
        self.peak_log = self.peak_log.max(self.log.len());
    }

    // ---- elementary edits ----

    fn slot_home(&self, slot: usize) -> usize {
        let (a, b) = self.graph.endpoints(slot / 2);
        if slot & 1 == 0 {
            a
        } else {
            b
        }
    }

    fn slot_unlink_raw(&mut self, slot: usize) {
        let (p, nx) = (self.slot_prev[slot], self.slot_next[slot]);
        let kind = self.slot_kind[slot];
        let home = self.slot_home(slot);
        if p == NIL {
            self.heads[kind as usize][home] = nx;
        } else {
            self.slot_next[p] = nx;
        }
        if nx != NIL {
            self.slot_prev[nx] = p;
        }
        self.counter.list_unlinks += 1;
    }

    fn slot_unlink(&mut self, slot: usize) {
        self.slot_unlink_raw(slot);
        self.push_log(Edit::SlotUnlink { slot });
    }

    fn slot_move(&mut self, slot: usize, to: FarColor) {
        let edit = Edit::SlotMove {
            slot,
            old_kind: self.slot_kind[slot],
            old_prev: self.slot_prev[slot],
            old_next: self.slot_next[slot],
        };
        self.slot_unlink_raw(slot);
        let home = self.slot_home(slot);
        let head = self.heads[to as usize][home];
        self.slot_prev[slot] = NIL;
        self.slot_next[slot] = head;
        if head != NIL {
            self.slot_prev[head] = slot;
        }
        self.heads[to as usize][home] = slot;
        self.slot_kind[slot] = to;
        self.counter.list_links += 1;
        self.push_log(edit);
    }

    fn ne_unlink(&mut self, e: usize) {
        let (p, nx) = (self.ne_prev[e], self.ne_next[e]);
        if p == NIL {
            self.ne_head = nx;
        } else {
            self.ne_next[p] = nx;
        }
        if nx != NIL {
            self.ne_prev[nx] = p;
        }
        self.counter.list_unlinks += 1;
        self.push_log(Edit::NeUnlink { e });
    }

    /// Links `e` into the candidate list after `after` (NIL = front).
    fn ne_insert_after(&mut self, e: usize, after: usize) {
        // The node's stale pointers are part of restore exactness: undo
        // puts them back rather than merely unlinking.
        self.push_log(Edit::NeInsert {
            e,
            old_prev: self.ne_prev[e],
            old_next: self.ne_next[e],
        });
        self.ne_prev[e] = after;
        if after == NIL {
            self.ne_next[e] = self.ne_head;
            self.ne_head = e;
        } else {
            self.ne_next[e] = self.ne_next[after];
            self.ne_next[after] = e;
        }
        if self.ne_next[e] != NIL {
            self.ne_prev[self.ne_next[e]] = e;
        }
        self.counter.list_links += 1;
    }

    fn set_in_ne(&mut self, e: usize, value: bool) {
        self.push_log(Edit::SetInNe { e, old: self.in_ne[e] });
        self.in_ne[e] = value;
        self.counter.flag_writes += 1;
    }

    fn set_in_f(&mut self, e: usize, value: bool) {
        self.push_log(Edit::SetInF { e, old: self.in_f[e] });
        self.in_f[e] = value;
        self.counter.flag_writes += 1;
    }

    fn set_dead(&mut self, e: usize) {
        debug_assert!(self.alive[e]);
        self.alive[e] = false;
        self.counter.flag_writes += 1;
        self.push_log(Edit::SetAlive { e });
    }

    fn set_label(&mut self, v: usize, value: u8) {
        self.push_log(Edit::SetLabel { v, old: self.label[v] });
        self.label[v] = value;
        self.counter.label_writes += 1;
    }

    fn restore_to(&mut self, mark: usize) {
        debug_assert!(mark <= self.log.len());
        while self.log.len() > mark {
            match self.log.pop().expect("checked above") {
                Edit::NeUnlink { e } => {
                    let (p, nx) = (self.ne_prev[e], self.ne_next[e]);
                    if p == NIL {
                        self.ne_head = e;
                    } else {
                        self.ne_next[p] = e;
                    }
                    if nx != NIL {
                        self.ne_prev[nx] = e;
                    }
                    self.counter.list_links += 1;
                }
                Edit::NeInsert { e, old_prev, old_next } => {
                    let (p, nx) = (self.ne_prev[e], self.ne_next[e]);
                    if p == NIL {
                        self.ne_head = nx;
                    } else {
                        self.ne_next[p] = nx;
                    }
                    if nx != NIL {
                        self.ne_prev[nx] = p;
                    }
                    self.ne_prev[e] = old_prev;
                    self.ne_next[e] = old_next;
                    self.counter.list_unlinks += 1;
                }
                Edit::SlotUnlink { slot } => {
                    let (p, nx) = (self.slot_prev[slot], self.slot_next[slot]);
                    let kind = self.slot_kind[slot];
                    let home = self.slot_home(slot);
                    if p == NIL {
                        self.heads[kind as usize][home] = slot;
                    } else {
                        self.slot_next[p] = slot;
                    }
                    if nx != NIL {
                        self.slot_prev[nx] = slot;
                    }
                    self.counter.list_links += 1;
                }
                Edit::SlotMove { slot, old_kind, old_prev, old_next } => {
                    self.slot_unlink_raw(slot);
                    self.slot_prev[slot] = old_prev;
                    self.slot_next[slot] = old_next;
                    self.slot_kind[slot] = old_kind;
                    let home = self.slot_home(slot);
                    if old_prev == NIL {
                        self.heads[old_kind as usize][home] = slot;
                    } else {
                        self.slot_next[old_prev] = slot;
                    }
                    if old_next != NIL {
                        self.slot_prev[old_next] = slot;
                    }
                    self.counter.list_links += 1;
                }
                Edit::SetAlive { e } => {
                    self.alive[e] = true;
                    self.counter.flag_writes += 1;
                }
                Edit::SetInNe { e, old } => {
                    self.in_ne[e] = old;
                    self.counter.flag_writes += 1;
                }
                Edit::SetInF { e, old } => {
                    self.in_f[e] = old;
                    self.counter.flag_writes += 1;
                }
                Edit::SetLabel { v, old } => {
                    self.label[v] = old;
                    self.counter.label_writes += 1;
                }
            }
        }
    }

    // ---- algorithm steps ----

    /// Removes an alive candidate edge from the working graph (logged).
    fn kill_edge(&mut self, e: usize) {
        debug_assert!(self.alive[e] && self.in_ne[e] && !self.in_f[e]);
        self.ne_unlink(e);
        self.set_in_ne(e, false);
        self.slot_unlink(2 * e);
        self.slot_unlink(2 * e + 1);
        self.set_dead(e);
    }

    /// Permanently removes a finished root edge (not logged; roots never
    /// come back). Root edges are never in `ne`.
    fn kill_root(&mut self, e: usize) {
        debug_assert!(self.alive[e] && !self.in_ne[e]);
        self.slot_unlink_raw(2 * e);
        self.slot_unlink_raw(2 * e + 1);
        self.alive[e] = false;
        self.counter.flag_writes += 1;
    }

    /// Colors `w` (which must be uncolored) and deletes the edges this makes
    /// monochromatic. Returns the smallest deleted edge id (NIL if none).
    /// The conflict edges are exactly the alive edges at `w` whose far
    /// endpoint already carries the same color.
    fn color_and_prune(&mut self, w: usize, color: u8) -> usize {
        debug_assert_eq!(self.label[w], 0);
        self.set_label(w, color);
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();
        let mut slot = self.heads[FarColor::of(color) as usize][w];
        while slot != NIL {
            scratch.push(slot / 2);
            slot = self.slot_next[slot];
        }
        let mut conflict_min = NIL;
        for &g in &scratch {
            if self.fault_armed {
                // Deliberate test-fixture fault: leave one monochromatic
                // edge alive, exactly once per run.
                self.fault_armed = false;
                continue;
            }
            conflict_min = conflict_min.min(g);
            self.kill_edge(g);
        }
        self.scratch = scratch;
        conflict_min
    }

    /// Splices the edges from the freshly covered vertex `w` toward
    /// uncolored vertices into the candidate list, refiling each far slot
    /// under `w`'s color.
    fn splice_uncovered(&mut self, w: usize) {
        let color = FarColor::of(self.label[w]);
        debug_assert!(color != FarColor::Uncolored);
        let mut cursor = NIL;
        let mut slot = self.heads[FarColor::Uncolored as usize][w];
        while slot != NIL {
            let e = slot / 2;
            debug_assert!(self.alive[e] && !self.in_f[e] && !self.in_ne[e]);
            while {
                let next = if cursor == NIL { self.ne_head } else { self.ne_next[cursor] };
                next != NIL && next < e
            } {
                cursor = if cursor == NIL { self.ne_head } else { self.ne_next[cursor] };
            }
            self.set_in_ne(e, true);
            self.ne_insert_after(e, cursor);
            cursor = e;
            let far = slot ^ 1;
            debug_assert_eq!(self.slot_kind[far], FarColor::Uncolored);
            self.slot_move(far, color);
            slot = self.slot_next[slot];
        }
    }

    // ---- verification machinery ----

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            slot_prev: self.slot_prev.clone(),
            slot_next: self.slot_next.clone(),
            slot_kind: self.slot_kind.clone(),
            heads: self.heads.clone(),
            ne_prev: self.ne_prev.clone(),
            ne_next: self.ne_next.clone(),
            ne_head: self.ne_head,
            in_ne: self.in_ne.clone(),
            alive: self.alive.clone(),
            in_f: self.in_f.clone(),
            label: self.label.clone(),
            members_sorted: self.members_sorted.clone(),
        }
    }

    fn ne_list(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut e = self.ne_head;
        while e != NIL {
            out.push(e);
            e = self.ne_next[e];
        }
        out
    }

    /// From-scratch re-derivation of every structural invariant. Runs at
    /// solution emission points; panics on any mismatch.
    fn check_invariants(&self) {
        let graph = self.graph;
        let n = graph.vertex_count();
        let m = graph.edge_count();

        // Solution mirrored in flags, sorted, and alive edges only outside.
        assert!(self.members_sorted.windows(2).all(|w| w[0] < w[1]), "solution not sorted");
        for e in 0..m {
            assert_eq!(self.in_f[e], self.members_sorted.binary_search(&e).is_ok());
        }

        // Colors mark exactly the solution's vertices, and properly.
        let mut covered = vec![false; n];
        for &e in &self.members_sorted {
            let (a, b) = graph.endpoints(e);
            covered[a] = true;
            covered[b] = true;
            assert!(self.label[a] != 0 && self.label[b] != 0 && self.label[a] != self.label[b],
                "solution edge {e} is not properly colored");
        }
        for (v, &is_covered) in covered.iter().enumerate() {
            assert_eq!(self.label[v] != 0, is_covered, "color of {v} vs solution coverage");
        }

        // No alive edge is monochromatic.
        for e in 0..m {
            if self.alive[e] {
                let (a, b) = graph.endpoints(e);
                assert!(self.label[a] == 0 || self.label[a] != self.label[b],
                    "alive edge {e} is monochromatic");
            }
        }

        // Candidate list equals its definition, sorted, flags in sync.
        let ne = self.ne_list();
        assert!(ne.windows(2).all(|w| w[0] < w[1]), "candidate list not sorted: {ne:?}");
        for (i, &e) in ne.iter().enumerate() {
            let expected_prev = if i == 0 { NIL } else { ne[i - 1] };
            assert_eq!(self.ne_prev[e], expected_prev);
        }
        for e in 0..m {
            let (a, b) = graph.endpoints(e);
            let expected = self.alive[e]
                && !self.in_f[e]
                && (self.label[a] != 0 || self.label[b] != 0);
            assert_eq!(self.in_ne[e], expected, "candidate membership of edge {e}");
            assert_eq!(ne.binary_search(&e).is_ok(), expected);
        }

        // Slot lists: well-formed, alive non-solution edges only, and for
        // uncolored vertices the filing matches the far endpoint's color.
        // (Lists of colored vertices may file far colors stale; nothing
        // reads them until their vertex is uncolored again, and undo order
        // guarantees they are accurate by then.)
        let mut seen = vec![false; 2 * m];
        for v in 0..n {
            for kind in [FarColor::Uncolored, FarColor::Color1, FarColor::Color2] {
                let mut slot = self.heads[kind as usize][v];
                let mut prev = NIL;
                let mut last_edge = None;
                while slot != NIL {
                    assert!(!seen[slot], "slot {slot} in two lists");
                    seen[slot] = true;
                    assert_eq!(self.slot_prev[slot], prev);
                    assert_eq!(self.slot_kind[slot], kind);
                    assert_eq!(self.slot_home(slot), v, "slot {slot} filed at the wrong vertex");
                    let e = slot / 2;
                    assert!(self.alive[e] && !self.in_f[e], "slot of deleted edge {e} listed");
                    if self.label[v] == 0 {
                        let far = self.slot_home(slot ^ 1);
                        assert_eq!(kind, FarColor::of(self.label[far]),
                            "slot {slot} misfiled at uncolored vertex {v}");
                    }
                    if kind == FarColor::Uncolored {
                        assert!(last_edge < Some(e), "uncolored list of {v} out of order");
                        last_edge = Some(e);
                    }
                    prev = slot;
                    slot = self.slot_next[slot];
                }
            }
        }
        for e in 0..m {
            let expected = self.alive[e] && !self.in_f[e];
            assert_eq!(seen[2 * e], expected, "slot listing of edge {e}");
            assert_eq!(seen[2 * e + 1], expected, "slot listing of edge {e}");
        }
    }
}

/// The slot of edge `e` at endpoint `v`.
fn slot_at(graph: &Graph, e: usize, v: usize) -> usize {
    let (a, b) = graph.endpoints(e);
    if v == a {
        2 * e
    } else {
        debug_assert_eq!(v, b);
        2 * e + 1
    }
}

/// Runs the enumeration with default options.
pub fn enumerate_edge_subgraphs<S: SolutionSink>(
    graph: &Graph,
    sink: &mut S,
) -> Result<EnumStats, StopEnumeration> {
    enumerate_edge_subgraphs_with(graph, &EnumOptions::default(), sink)
}

/// Runs the enumeration. Solutions are emitted in depth-first order, each as
/// an ascending edge-id list. Unlike the induced variant, the amortized
/// per-solution edit bound is a plain constant and needs no particular
/// vertex order.
pub fn enumerate_edge_subgraphs_with<S: SolutionSink>(
    graph: &Graph,
    options: &EnumOptions,
    sink: &mut S,
) -> Result<EnumStats, StopEnumeration> {
    let mut state = State::new(graph, options);
    let mut solutions: u64 = 0;
    let mut levels: Vec<Level> = Vec::new();
    let mut snapshots: Vec<Snapshot> = Vec::new();

    for root in 0..graph.edge_count() {
        debug_assert!(state.alive[root]);
        debug_assert!(state.log.is_empty());
        let (a, b) = graph.endpoints(root);

        // Build the root solution {root}: the root edge leaves the working
        // graph for good, its endpoints take the two colors, and both
        // endpoints' outward edges become candidates.
        state.kill_root(root);
        state.set_in_f(root, true);
        state.members_sorted.push(root);
        state.set_label(a, 1);
        state.splice_uncovered(a);
        state.set_label(b, 2);
        state.splice_uncovered(b);

        sink.accept(&state.members_sorted)?;
        solutions += 1;
        if state.check {
            state.check_invariants();
        }
        levels.push(Level {
            entry_mark: state.log.len(),
            pre_extend_mark: 0,
            chosen: root,
            killed: Vec::new(),
            pending: None,
        });

        while !levels.is_empty() {
            let depth = levels.len() - 1;

            // Resolve a kept-alive cover phase: reuse it if the next
            // candidate extends the same group (same new vertex, same
            // implied color, and no deleted conflict edge would have
            // preceded it in the scan), otherwise roll it back — reviving
            // the conflict edges as candidates — and replay the candidate
            // deletions that came after it.
            let mut reused_cover = false;
            if let Some(pending) = levels[depth].pending {
                let e = state.ne_head;
                let mut reuse = false;
                if e != NIL && e < pending.conflict_min {
                    let (p, q) = graph.endpoints(e);
                    let far = if p == pending.w {
                        Some(q)
                    } else if q == pending.w {
                        Some(p)
                    } else {
                        None
                    };
                    if let Some(x) = far {
                        debug_assert!(state.label[x] != 0,
                            "candidates touching the pending vertex attach through V(F)");
                        reuse = state.label[x] != 0 && opposite(state.label[x]) == pending.label;
                    }
                }
                if reuse {
                    reused_cover = true;
                } else {
                    state.restore_to(pending.mark);
                    for i in pending.killed_len..levels[depth].killed.len() {
                        let g = levels[depth].killed[i];
                        state.kill_edge(g);
                    }
                    levels[depth].pending = None;
                }
            }

            let e = state.ne_head;
            if e == NIL {
                // Level exhausted: revive everything it deleted, then undo
                // the extend edits of the choice that created it.
                let done = levels.pop().expect("loop guard");
                state.restore_to(done.entry_mark);
                let Some(parent) = levels.last() else { break };
                state.restore_to(parent.pre_extend_mark);
                let pos = state
                    .members_sorted
                    .binary_search(&done.chosen)
                    .expect("chosen edge is a solution member");
                state.members_sorted.remove(pos);
                if state.check {
                    let before = snapshots.pop().expect("snapshot pushed at descent");
                    assert!(
                        before == state.snapshot(),
                        "structure after backtrack differs from structure before the child call"
                    );
                }
                continue;
            }

            // Delete phase: e leaves the working graph until the level ends.
            state.kill_edge(e);
            levels[depth].killed.push(e);

            // Cover phase (or reuse of the kept one).
            let newly_covered: Option<usize>;
            if reused_cover {
                newly_covered = Some(levels[depth].pending.expect("just reused").w);
            } else {
                let (p, q) = graph.endpoints(e);
                let (lp, lq) = (state.label[p], state.label[q]);
                if lp != 0 && lq != 0 {
                    // Both endpoints already in V(F): nothing to cover. The
                    // colors differ unless the fault fixture left a
                    // monochromatic edge alive on purpose.
                    newly_covered = None;
                } else {
                    let (w, x) = if lp == 0 { (p, q) } else { (q, p) };
                    debug_assert!(state.label[x] != 0, "candidates always touch V(F)");
                    let mark = state.log.len();
                    let color = opposite(state.label[x]);
                    let conflict_min = state.color_and_prune(w, color);
                    levels[depth].pending = Some(PendingCover {
                        mark,
                        killed_len: levels[depth].killed.len(),
                        w,
                        label: color,
                        conflict_min,
                    });
                    newly_covered = Some(w);
                }
            }

            // Extend phase: e joins the solution; a newly covered vertex
            // contributes its outward edges as candidates.
            if state.check {
                snapshots.push(state.snapshot());
            }
            levels[depth].pre_extend_mark = state.log.len();
            state.set_in_f(e, true);
            let pos = state.members_sorted.binary_search(&e).unwrap_err();
            state.members_sorted.insert(pos, e);
            if let Some(w) = newly_covered {
                state.splice_uncovered(w);
            }

            sink.accept(&state.members_sorted)?;
            solutions += 1;
            if state.check {
                state.check_invariants();
            }
            levels.push(Level {
                entry_mark: state.log.len(),
                pre_extend_mark: 0,
                chosen: e,
                killed: Vec::new(),
                pending: None,
            });
        }

        // Undo the root construction; the root edge itself stays deleted.
        state.restore_to(0);
        state.members_sorted.clear();
        debug_assert!(snapshots.is_empty());
    }

    Ok(EnumStats {
        solutions,
        edits: state.counter,
        peak_log_entries: state.peak_log,
        live_units: state.live_units(),
    })
}
