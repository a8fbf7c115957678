//! Enumeration of connected bipartite induced vertex sets.
//!
//! The solution space is partitioned by a depth-first tree. Each tree node
//! holds a connected bipartite set `S` (emitted on entry) plus a sorted
//! candidate list: the vertices whose addition keeps `S` connected and
//! bipartite. Candidates are consumed smallest-first; descending into the
//! child for candidate `u` shrinks/extends the candidate list reversibly, and
//! once the child's subtree is exhausted `u` is removed from the working
//! graph, so later siblings cannot produce any set containing `u` — that
//! disjointness is what makes the output duplicate-free.
//!
//! Cost model: with vertices pre-sorted by a degeneracy ordering (see
//! [`crate::order`]), every vertex has at most `k` larger neighbors, and all
//! per-candidate maintenance walks larger-neighbor lists only. The per-child
//! update cost is then O(k·(1 + |child candidates| + |conflicts removed|)),
//! which amortizes to O(k) per emitted solution. Every elementary edit is
//! tallied so tests can measure this.
//!
//! Data-structure layout:
//! - One *slot* per edge `(w, x)` with `w < x`, representing `w`'s membership
//!   in the neighbor bookkeeping of its larger endpoint `x` (the "owner").
//!   Each owner partitions its alive smaller neighbors into three intrusive
//!   doubly-linked lists: unvisited, candidate, retired (visited but not a
//!   candidate). Larger neighbors need no dynamic list — the static sorted
//!   adjacency suffix is scanned with flag filters, and it is at most `k`
//!   long.
//! - A global sorted doubly-linked candidate list over vertex ids.
//! - An undo log: every link/unlink/move/flag edit is recorded and popped in
//!   reverse order on backtrack, restoring the structure exactly.

use crate::counter::OpCounter;
use crate::graph::Graph;
use crate::{EnumOptions, EnumStats, SolutionSink, StopEnumeration};

const NIL: usize = usize::MAX;

/// Which half of the bipartition a vertex sits in (or would sit in, for a
/// candidate). The root of the current solution is `L`; every vertex added
/// later takes the side opposite its attaching neighbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    L,
    R,
}

impl Side {
    fn opposite(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
        }
    }
}

/// Which of its owner's three lists a slot currently belongs to. The member
/// vertex's state decides: not yet seen in this subtree / currently a
/// candidate / seen but no longer (or not) a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotKind {
    Unvisited = 0,
    Candidate = 1,
    Retired = 2,
}

/// One reversible structure edit. Undo relies on unlinked nodes keeping
/// their stale prev/next pointers (the classic dancing-links trick); moves
/// additionally remember where they came from.
#[derive(Debug, Clone, Copy)]
enum Edit {
    CandUnlink { v: usize },
    CandInsert { v: usize, old_prev: usize, old_next: usize },
    SlotUnlink { slot: usize },
    SlotMove { slot: usize, old_kind: SlotKind, old_prev: usize, old_next: usize },
    SetVisited { v: usize },
    SetInS { v: usize, old: bool },
    SetInCand { v: usize, old: bool },
    SetAlive { v: usize },
    SetSide { v: usize, old: Option<Side> },
}

/// Full copy of the mutable structure, for the restore-exactness checks.
#[derive(Debug, Clone, PartialEq)]
struct Snapshot {
    slot_prev: Vec<usize>,
    slot_next: Vec<usize>,
    slot_kind: Vec<SlotKind>,
    heads: [Vec<usize>; 3],
    cand_prev: Vec<usize>,
    cand_next: Vec<usize>,
    cand_head: usize,
    alive: Vec<bool>,
    visited: Vec<bool>,
    in_s: Vec<bool>,
    in_cand: Vec<bool>,
    side: Vec<Option<Side>>,
    members_sorted: Vec<usize>,
}

struct State<'g> {
    graph: &'g Graph,
    /// `graph.neighbors(v)[larger_start[v]..]` = neighbors larger than `v`.
    larger_start: Vec<usize>,

    // Slot lists: one slot per edge, owned by the larger endpoint.
    slot_prev: Vec<usize>,
    slot_next: Vec<usize>,
    slot_kind: Vec<SlotKind>,
    /// Per-kind, per-owner list heads.
    heads: [Vec<usize>; 3],

    // Global candidate list, sorted ascending by vertex id.
    cand_prev: Vec<usize>,
    cand_next: Vec<usize>,
    cand_head: usize,

    alive: Vec<bool>,
    visited: Vec<bool>,
    in_s: Vec<bool>,
    in_cand: Vec<bool>,
    side: Vec<Option<Side>>,

    /// Current solution, kept sorted for emission.
    members_sorted: Vec<usize>,

    log: Vec<Edit>,
    peak_log: usize,
    counter: OpCounter,

    /// Reusable buffer: members of an unvisited-list walked before edits.
    scratch: Vec<usize>,

    check: bool,
    fault_armed: bool,
}

/// One level of the explicit depth-first stack.
struct Level {
    /// Log length right after this level's candidate set was built.
    entry_mark: usize,
    /// Log length before the currently running child's build edits.
    pre_child_mark: usize,
    /// Candidate whose addition created this level (NIL for a root level).
    chosen: usize,
}

impl<'g> State<'g> {
    fn new(graph: &'g Graph, options: &EnumOptions) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let larger_start = (0..n)
            .map(|v| graph.neighbors(v).partition_point(|&(w, _)| w < v))
            .collect();

        let mut state = State {
            graph,
            larger_start,
            slot_prev: vec![NIL; m],
            slot_next: vec![NIL; m],
            slot_kind: vec![SlotKind::Unvisited; m],
            heads: [vec![NIL; n], vec![NIL; n], vec![NIL; n]],
            cand_prev: vec![NIL; n],
            cand_next: vec![NIL; n],
            cand_head: NIL,
            alive: vec![true; n],
            visited: vec![false; n],
            in_s: vec![false; n],
            in_cand: vec![false; n],
            side: vec![None; n],
            members_sorted: Vec::new(),
            log: Vec::new(),
            peak_log: 0,
            counter: OpCounter::default(),
            scratch: Vec::new(),
            check: options.check_invariants,
            fault_armed: options.fault_skip_conflict,
        };

        // Build each owner's unvisited list in ascending member order by
        // linking the smaller-neighbor prefix of its adjacency back to front.
        for x in 0..n {
            for &(w, e) in state.smaller(x).iter().rev() {
                debug_assert!(w < x);
                state.slot_next[e] = state.heads[SlotKind::Unvisited as usize][x];
                state.slot_prev[e] = NIL;
                if state.slot_next[e] != NIL {
                    state.slot_prev[state.slot_next[e]] = e;
                }
                state.heads[SlotKind::Unvisited as usize][x] = e;
            }
        }
        state
    }

    fn larger(&self, v: usize) -> &'g [(usize, usize)] {
        &self.graph.neighbors(v)[self.larger_start[v]..]
    }

    fn smaller(&self, v: usize) -> &'g [(usize, usize)] {
        &self.graph.neighbors(v)[..self.larger_start[v]]
    }

    /// Number of array cells of persistent mutable state, for the space
    /// measurement: 3 slot arrays (m each), 3 head arrays, the candidate
    /// links, four flag arrays and the side array (n each).
    fn live_units(&self) -> usize {
        3 * self.graph.edge_count() + 10 * self.graph.vertex_count()
    }

    fn push_log(&mut self, edit: Edit) {
        self.log.push(edit);
        self.peak_log = self.peak_log.max(self.log.len());
    }

    // ---- elementary edits (all logged, all counted) ----

    fn owner_of(&self, slot: usize) -> usize {
        self.graph.endpoints(slot).1
    }

    fn head_of(&mut self, kind: SlotKind, owner: usize) -> &mut usize {
        &mut self.heads[kind as usize][owner]
    }

    fn slot_unlink_raw(&mut self, slot: usize) {
        let (p, nx) = (self.slot_prev[slot], self.slot_next[slot]);
        let kind = self.slot_kind[slot];
        let owner = self.owner_of(slot);
        if p == NIL {
            *self.head_of(kind, owner) = nx;
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

    fn slot_push_front(&mut self, slot: usize, kind: SlotKind) {
        let owner = self.owner_of(slot);
        let head = *self.head_of(kind, owner);
        self.slot_prev[slot] = NIL;
        self.slot_next[slot] = head;
        if head != NIL {
            self.slot_prev[head] = slot;
        }
        *self.head_of(kind, owner) = slot;
        self.slot_kind[slot] = kind;
        self.counter.list_links += 1;
    }

    fn slot_move(&mut self, slot: usize, to: SlotKind) {
        let edit = Edit::SlotMove {
            slot,
            old_kind: self.slot_kind[slot],
            old_prev: self.slot_prev[slot],
            old_next: self.slot_next[slot],
        };
        self.slot_unlink_raw(slot);
        self.slot_push_front(slot, to);
        self.push_log(edit);
    }

    fn cand_unlink(&mut self, v: usize) {
        let (p, nx) = (self.cand_prev[v], self.cand_next[v]);
        if p == NIL {
            self.cand_head = nx;
        } else {
            self.cand_next[p] = nx;
        }
        if nx != NIL {
            self.cand_prev[nx] = p;
        }
        self.counter.list_unlinks += 1;
        self.push_log(Edit::CandUnlink { v });
    }

    /// Links `v` after `after` (NIL = front). Caller keeps the list sorted.
    fn cand_insert_after(&mut self, v: usize, after: usize) {
        // The node's stale pointers are part of restore exactness: undo
        // puts them back rather than merely unlinking.
        self.push_log(Edit::CandInsert {
            v,
            old_prev: self.cand_prev[v],
            old_next: self.cand_next[v],
        });
        self.cand_prev[v] = after;
        if after == NIL {
            self.cand_next[v] = self.cand_head;
            self.cand_head = v;
        } else {
            self.cand_next[v] = self.cand_next[after];
            self.cand_next[after] = v;
        }
        if self.cand_next[v] != NIL {
            self.cand_prev[self.cand_next[v]] = v;
        }
        self.counter.list_links += 1;
    }

    fn set_visited(&mut self, v: usize) {
        debug_assert!(!self.visited[v]);
        self.visited[v] = true;
        self.counter.flag_writes += 1;
        self.push_log(Edit::SetVisited { v });
    }

    fn set_in_s(&mut self, v: usize, value: bool) {
        self.push_log(Edit::SetInS { v, old: self.in_s[v] });
        self.in_s[v] = value;
        self.counter.flag_writes += 1;
    }

    fn set_in_cand(&mut self, v: usize, value: bool) {
        self.push_log(Edit::SetInCand { v, old: self.in_cand[v] });
        self.in_cand[v] = value;
        self.counter.flag_writes += 1;
    }

    fn set_dead(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.counter.flag_writes += 1;
        self.push_log(Edit::SetAlive { v });
    }

    fn set_side(&mut self, v: usize, value: Side) {
        self.push_log(Edit::SetSide { v, old: self.side[v] });
        self.side[v] = Some(value);
        self.counter.label_writes += 1;
    }

    fn restore_to(&mut self, mark: usize) {
        debug_assert!(mark <= self.log.len());
        while self.log.len() > mark {
            match self.log.pop().expect("checked above") {
                Edit::CandUnlink { v } => {
                    // Stale pointers still address the old neighbors.
                    let (p, nx) = (self.cand_prev[v], self.cand_next[v]);
                    if p == NIL {
                        self.cand_head = v;
                    } else {
                        self.cand_next[p] = v;
                    }
                    if nx != NIL {
                        self.cand_prev[nx] = v;
                    }
                    self.counter.list_links += 1;
                }
                Edit::CandInsert { v, old_prev, old_next } => {
                    let (p, nx) = (self.cand_prev[v], self.cand_next[v]);
                    if p == NIL {
                        self.cand_head = nx;
                    } else {
                        self.cand_next[p] = nx;
                    }
                    if nx != NIL {
                        self.cand_prev[nx] = p;
                    }
                    self.cand_prev[v] = old_prev;
                    self.cand_next[v] = old_next;
                    self.counter.list_unlinks += 1;
                }
                Edit::SlotUnlink { slot } => {
                    let (p, nx) = (self.slot_prev[slot], self.slot_next[slot]);
                    let kind = self.slot_kind[slot];
                    let owner = self.owner_of(slot);
                    if p == NIL {
                        *self.head_of(kind, owner) = slot;
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
                    let owner = self.owner_of(slot);
                    if old_prev == NIL {
                        *self.head_of(old_kind, owner) = slot;
                    } else {
                        self.slot_next[old_prev] = slot;
                    }
                    if old_next != NIL {
                        self.slot_prev[old_next] = slot;
                    }
                    self.counter.list_links += 1;
                }
                Edit::SetVisited { v } => {
                    self.visited[v] = false;
                    self.counter.flag_writes += 1;
                }
                Edit::SetInS { v, old } => {
                    self.in_s[v] = old;
                    self.counter.flag_writes += 1;
                }
                Edit::SetInCand { v, old } => {
                    self.in_cand[v] = old;
                    self.counter.flag_writes += 1;
                }
                Edit::SetAlive { v } => {
                    self.alive[v] = true;
                    self.counter.flag_writes += 1;
                }
                Edit::SetSide { v, old } => {
                    self.side[v] = old;
                    self.counter.label_writes += 1;
                }
            }
        }
    }

    // ---- algorithm steps ----

    /// Enters `w` into the candidate list with the given side. `cursor` is
    /// the list position after which `w` belongs; it advances monotonically
    /// across one batch of ascending insertions.
    fn make_candidate(&mut self, w: usize, side: Side, cursor: &mut usize) {
        debug_assert!(self.alive[w] && !self.visited[w]);
        self.set_visited(w);
        self.set_in_cand(w, true);
        self.set_side(w, side);
        loop {
            let next = if *cursor == NIL { self.cand_head } else { self.cand_next[*cursor] };
            if next == NIL || next > w {
                break;
            }
            *cursor = next;
        }
        self.cand_insert_after(w, *cursor);
        *cursor = w;
        let graph = self.graph;
        for &(_, e) in &graph.neighbors(w)[self.larger_start[w]..] {
            debug_assert_eq!(self.slot_kind[e], SlotKind::Unvisited);
            self.slot_move(e, SlotKind::Candidate);
        }
    }

    /// Removes a candidate that now conflicts (its side equals the side of a
    /// new solution member it is adjacent to). It stays alive and visited.
    fn retire_candidate(&mut self, w: usize) {
        debug_assert!(self.in_cand[w]);
        self.cand_unlink(w);
        self.set_in_cand(w, false);
        let graph = self.graph;
        for &(_, e) in &graph.neighbors(w)[self.larger_start[w]..] {
            debug_assert_eq!(self.slot_kind[e], SlotKind::Candidate);
            self.slot_move(e, SlotKind::Retired);
        }
    }

    /// Moves candidate `u` into the solution and rebuilds the candidate list
    /// for `S ∪ {u}`: conflicting same-side candidates among `u`'s larger
    /// neighbors leave, and `u`'s unvisited neighbors join with the opposite
    /// side. Smaller candidates need no scan: everything smaller than the
    /// list head is already removed from the working graph.
    fn build_child(&mut self, u: usize) {
        debug_assert_eq!(self.cand_head, u);
        let su = self.side[u].expect("candidates always carry a side");
        let graph = self.graph;

        for &(w, _) in &graph.neighbors(u)[self.larger_start[u]..] {
            if self.in_cand[w] && self.side[w] == Some(su) {
                if self.fault_armed {
                    // Deliberate test-fixture fault: leave one conflicting
                    // candidate in place, exactly once per run.
                    self.fault_armed = false;
                    continue;
                }
                self.retire_candidate(w);
            }
        }

        self.cand_unlink(u);
        self.set_in_cand(u, false);
        self.set_in_s(u, true);
        for &(_, e) in &graph.neighbors(u)[self.larger_start[u]..] {
            debug_assert_eq!(self.slot_kind[e], SlotKind::Candidate);
            self.slot_move(e, SlotKind::Retired);
        }
        let pos = self.members_sorted.binary_search(&u).unwrap_err();
        self.members_sorted.insert(pos, u);

        // New candidates: u's unvisited neighbors, smaller ones first (the
        // owner list is walked into a buffer before edits touch it).
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();
        let mut slot = self.heads[SlotKind::Unvisited as usize][u];
        while slot != NIL {
            scratch.push(graph.endpoints(slot).0);
            slot = self.slot_next[slot];
        }
        let mut cursor = NIL;
        for &w in &scratch {
            self.make_candidate(w, su.opposite(), &mut cursor);
        }
        self.scratch = scratch;
        for &(w, _) in &graph.neighbors(u)[self.larger_start[u]..] {
            if !self.visited[w] {
                debug_assert!(self.alive[w]);
                self.make_candidate(w, su.opposite(), &mut cursor);
            }
        }
    }

    /// Removes an exhausted candidate from the working graph (logged, so the
    /// parent's backtrack revives it). Only larger-neighbor bookkeeping is
    /// touched: O(k) edits.
    fn kill_vertex(&mut self, u: usize) {
        debug_assert!(self.alive[u] && self.in_cand[u]);
        self.cand_unlink(u);
        self.set_in_cand(u, false);
        self.set_dead(u);
        let graph = self.graph;
        for &(_, e) in &graph.neighbors(u)[self.larger_start[u]..] {
            debug_assert_eq!(self.slot_kind[e], SlotKind::Candidate);
            self.slot_unlink(e);
        }
    }

    /// Permanently removes a finished root from the graph (not logged; roots
    /// never come back).
    fn kill_root(&mut self, v: usize) {
        debug_assert!(self.alive[v] && !self.visited[v]);
        let graph = self.graph;
        for &(_, e) in &graph.neighbors(v)[self.larger_start[v]..] {
            debug_assert_eq!(self.slot_kind[e], SlotKind::Unvisited);
            self.slot_unlink_raw(e);
        }
        self.alive[v] = false;
        self.counter.flag_writes += 1;
    }

    // ---- verification machinery (debug / test builds of the run) ----

    fn snapshot(&self) -> Snapshot {
        Snapshot {
            slot_prev: self.slot_prev.clone(),
            slot_next: self.slot_next.clone(),
            slot_kind: self.slot_kind.clone(),
            heads: self.heads.clone(),
            cand_prev: self.cand_prev.clone(),
            cand_next: self.cand_next.clone(),
            cand_head: self.cand_head,
            alive: self.alive.clone(),
            visited: self.visited.clone(),
            in_s: self.in_s.clone(),
            in_cand: self.in_cand.clone(),
            side: self.side.clone(),
            members_sorted: self.members_sorted.clone(),
        }
    }

    fn cand_list(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut v = self.cand_head;
        while v != NIL {
            out.push(v);
            v = self.cand_next[v];
        }
        out
    }

    /// From-scratch re-derivation of every invariant the incremental
    /// structures are supposed to maintain. Panics on any mismatch.
    fn check_invariants(&self) {
        let graph = self.graph;
        let n = graph.vertex_count();

        // Solution is mirrored in flags and sorted.
        assert!(self.members_sorted.windows(2).all(|w| w[0] < w[1]), "solution not sorted");
        for v in 0..n {
            assert_eq!(self.in_s[v], self.members_sorted.binary_search(&v).is_ok());
        }

        // Proper 2-coloring of the solution.
        for &(u, v) in graph.edges() {
            if self.in_s[u] && self.in_s[v] {
                assert!(
                    self.side[u].is_some() && self.side[u] != self.side[v],
                    "monochromatic solution edge ({u},{v})"
                );
            }
        }

        // Candidate list: sorted, flags consistent, link symmetry.
        let cand = self.cand_list();
        assert!(cand.windows(2).all(|w| w[0] < w[1]), "candidate list not sorted: {cand:?}");
        for (i, &v) in cand.iter().enumerate() {
            assert!(self.in_cand[v] && self.alive[v] && self.visited[v] && !self.in_s[v]);
            let expected_prev = if i == 0 { NIL } else { cand[i - 1] };
            assert_eq!(self.cand_prev[v], expected_prev);
        }
        for v in 0..n {
            if self.in_cand[v] {
                assert!(cand.binary_search(&v).is_ok(), "in_cand set but {v} not in list");
            }
        }

        // Candidate set equals its definition on the alive graph: adjacent
        // to the solution with all solution neighbors on a single side; and
        // each candidate's stored side is the opposite of that side.
        for v in 0..n {
            let s_sides: Vec<Side> = graph
                .neighbors(v)
                .iter()
                .filter(|&&(w, _)| self.in_s[w])
                .map(|&(w, _)| self.side[w].expect("solution members have sides"))
                .collect();
            let expected = self.alive[v]
                && !self.in_s[v]
                && !s_sides.is_empty()
                && s_sides.windows(2).all(|p| p[0] == p[1]);
            assert_eq!(
                self.in_cand[v], expected,
                "candidate membership of {v} disagrees with recomputation"
            );
            if expected {
                assert_eq!(self.side[v], Some(s_sides[0].opposite()), "side of candidate {v}");
            }
        }

        // Every candidate has at most one larger neighbor in the solution.
        for &v in &cand {
            let larger_in_s = self.larger(v).iter().filter(|&&(w, _)| self.in_s[w]).count();
            assert!(larger_in_s <= 1, "candidate {v} has {larger_in_s} larger solution members");
        }

        // Owner lists partition alive smaller neighbors by member state.
        let mut seen_slot = vec![false; graph.edge_count()];
        for x in 0..n {
            for kind in [SlotKind::Unvisited, SlotKind::Candidate, SlotKind::Retired] {
                let mut slot = self.heads[kind as usize][x];
                let mut prev = NIL;
                while slot != NIL {
                    assert!(!seen_slot[slot], "slot {slot} in two lists");
                    seen_slot[slot] = true;
                    assert_eq!(self.slot_prev[slot], prev);
                    assert_eq!(self.slot_kind[slot], kind);
                    let (w, owner) = graph.endpoints(slot);
                    assert_eq!(owner, x, "slot {slot} filed under the wrong owner");
                    assert!(self.alive[w], "dead member {w} still listed");
                    let expected_kind = if !self.visited[w] {
                        SlotKind::Unvisited
                    } else if self.in_cand[w] {
                        SlotKind::Candidate
                    } else {
                        SlotKind::Retired
                    };
                    assert_eq!(kind, expected_kind, "slot {slot} (member {w}) misfiled");
                    prev = slot;
                    slot = self.slot_next[slot];
                }
            }
        }
        for (e, &seen) in seen_slot.iter().enumerate() {
            let (w, _) = graph.endpoints(e);
            assert_eq!(seen, self.alive[w], "slot {e} listing vs member liveness");
        }

        // Unvisited lists are sorted ascending by member (splice order
        // depends on it).
        for x in 0..n {
            let mut slot = self.heads[SlotKind::Unvisited as usize][x];
            let mut last = None;
            while slot != NIL {
                let (w, _) = graph.endpoints(slot);
                assert!(last < Some(w), "unvisited list of {x} out of order");
                last = Some(w);
                slot = self.slot_next[slot];
            }
        }
    }
}

/// Runs the enumeration with default options.
pub fn enumerate_induced<S: SolutionSink>(
    graph: &Graph,
    sink: &mut S,
) -> Result<EnumStats, StopEnumeration> {
    enumerate_induced_with(graph, &EnumOptions::default(), sink)
}

/// Runs the enumeration. Solutions are emitted in depth-first order, each as
/// an ascending vertex-id list. Correct for any simple graph; the O(k)
/// amortized cost additionally requires the graph to be degeneracy-relabeled
/// (see [`crate::DegeneracyOrdering::relabel`]).
pub fn enumerate_induced_with<S: SolutionSink>(
    graph: &Graph,
    options: &EnumOptions,
    sink: &mut S,
) -> Result<EnumStats, StopEnumeration> {
    let mut state = State::new(graph, options);
    let mut solutions: u64 = 0;
    let mut levels: Vec<Level> = Vec::new();
    let mut snapshots: Vec<Snapshot> = Vec::new();

    for root in 0..graph.vertex_count() {
        debug_assert!(state.alive[root]);
        debug_assert!(state.log.is_empty());

        // Build the root solution {root}: every alive larger neighbor is a
        // candidate on the opposite side.
        state.set_visited(root);
        state.set_in_s(root, true);
        state.set_side(root, Side::L);
        state.members_sorted.push(root);
        for &(_, e) in state.larger(root) {
            state.slot_move(e, SlotKind::Retired);
        }
        let mut cursor = NIL;
        for &(w, _) in state.larger(root) {
            debug_assert!(state.alive[w]);
            state.make_candidate(w, Side::R, &mut cursor);
        }

        sink.accept(&state.members_sorted)?;
        solutions += 1;
        if state.check {
            state.check_invariants();
        }
        levels.push(Level { entry_mark: state.log.len(), pre_child_mark: 0, chosen: NIL });

        while let Some(level) = levels.last_mut() {
            let u = state.cand_head;
            if u == NIL {
                // Level exhausted: revive its candidates, then unwind the
                // child-build edits in the parent and retire the chosen
                // vertex there.
                let done = levels.pop().expect("non-empty; just peeked");
                state.restore_to(done.entry_mark);
                let Some(parent) = levels.last() else { break };
                state.restore_to(parent.pre_child_mark);
                let pos = state
                    .members_sorted
                    .binary_search(&done.chosen)
                    .expect("chosen vertex is a solution member");
                state.members_sorted.remove(pos);
                if state.check {
                    let before = snapshots.pop().expect("snapshot pushed at descent");
                    assert!(
                        before == state.snapshot(),
                        "structure after backtrack differs from structure before the child call"
                    );
                }
                state.kill_vertex(done.chosen);
                continue;
            }

            if state.check {
                snapshots.push(state.snapshot());
            }
            level.pre_child_mark = state.log.len();
            state.build_child(u);
            sink.accept(&state.members_sorted)?;
            solutions += 1;
            if state.check {
                state.check_invariants();
            }
            levels.push(Level { entry_mark: state.log.len(), pre_child_mark: 0, chosen: u });
        }

        // The break above popped the root level; undo its construction and
        // take the root out of the graph for good.
        state.restore_to(0);
        state.members_sorted.clear();
        state.kill_root(root);
        debug_assert!(snapshots.is_empty());
    }

    Ok(EnumStats {
        solutions,
        edits: state.counter,
        peak_log_entries: state.peak_log,
        live_units: state.live_units(),
    })
}
