//! Instrumentation for the incremental data-structure work the enumerators do.
//!
//! Every linked-list unlink/relink, flag write, and label write is tallied,
//! including the ones performed while undoing earlier edits. The totals feed
//! the amortized-cost assertions in the test suite: dividing `total()` by the
//! number of emitted solutions bounds the per-solution update cost.

/// Tally of elementary data-structure operations.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    /// Removals of a node from a doubly linked list.
    pub list_unlinks: u64,
    /// Insertions of a node into a doubly linked list (fresh or re-link).
    pub list_links: u64,
    /// Writes to a boolean state flag (alive, visited, membership bits).
    pub flag_writes: u64,
    /// Writes to a vertex/edge label or side tag.
    pub label_writes: u64,
}

impl OpCounter {
    pub fn total(&self) -> u64 {
        self.list_unlinks + self.list_links + self.flag_writes + self.label_writes
    }
}

impl std::ops::AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        self.list_unlinks += rhs.list_unlinks;
        self.list_links += rhs.list_links;
        self.flag_writes += rhs.flag_writes;
        self.label_writes += rhs.label_writes;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_accumulates() {
        let mut a = OpCounter { list_unlinks: 1, list_links: 2, flag_writes: 3, label_writes: 4 };
        assert_eq!(a.total(), 10);
        a += OpCounter { list_unlinks: 10, ..OpCounter::default() };
        assert_eq!(a.list_unlinks, 11);
        assert_eq!(a.total(), 20);
    }
}
