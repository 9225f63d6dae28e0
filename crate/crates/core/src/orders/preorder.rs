use std::fmt;

use crate::logic::{World, WorldSet};

use super::OrderError;

/// A total preorder over the worlds `0..n`, stored as a dense rank vector.
///
/// Ranks are normalized: level 0 is nonempty and no level is skipped, so two
/// preorders are equal exactly when their rank vectors are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalPreorder {
    ranks: Vec<u8>,
}

impl TotalPreorder {
    /// Builds a preorder from arbitrary ranks, normalizing them.
    pub fn from_ranks(ranks: &[u32]) -> Result<TotalPreorder, OrderError> {
        if ranks.is_empty() || ranks.len() > 64 {
            return Err(OrderError::WorldCount(ranks.len()));
        }
        let mut distinct: Vec<u32> = ranks.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let ranks = ranks
            .iter()
            .map(|r| distinct.binary_search(r).expect("rank is present") as u8)
            .collect();
        Ok(TotalPreorder { ranks })
    }

    /// The preorder whose levels are the given disjoint, nonempty sets, in
    /// order. The levels must cover `0..world_count`.
    pub fn from_levels(world_count: usize, levels: &[WorldSet]) -> Result<TotalPreorder, OrderError> {
        let mut ranks = vec![u8::MAX; world_count];
        let mut covered = WorldSet::EMPTY;
        let mut k = 0u8;
        for &level in levels {
            if level.is_empty() {
                continue;
            }
            if level.intersects(covered) || !level.is_subset(WorldSet::full(world_count)) {
                return Err(OrderError::Levels);
            }
            for w in level.iter() {
                ranks[w.index()] = k;
            }
            covered = covered | level;
            k += 1;
        }
        if covered != WorldSet::full(world_count) {
            return Err(OrderError::Levels);
        }
        Ok(TotalPreorder { ranks })
    }

    /// The flat preorder with a single level.
    pub fn flat(world_count: usize) -> TotalPreorder {
        TotalPreorder {
            ranks: vec![0; world_count],
        }
    }

    pub(crate) fn from_normalized(ranks: Vec<u8>) -> TotalPreorder {
        debug_assert!(TotalPreorder::from_ranks(&ranks.iter().map(|&r| r as u32).collect::<Vec<_>>())
            .map(|p| p.ranks == ranks)
            .unwrap_or(false));
        TotalPreorder { ranks }
    }

    pub fn world_count(&self) -> usize {
        self.ranks.len()
    }

    pub fn all_worlds(&self) -> WorldSet {
        WorldSet::full(self.ranks.len())
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }

    pub fn rank(&self, w: World) -> u8 {
        self.ranks[w.index()]
    }

    /// Number of levels.
    pub fn height(&self) -> usize {
        self.ranks.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    pub fn level(&self, k: usize) -> WorldSet {
        (0..self.ranks.len())
            .filter(|&i| self.ranks[i] as usize == k)
            .map(|i| World(i as u8))
            .collect()
    }

    pub fn levels(&self) -> Vec<WorldSet> {
        (0..self.height()).map(|k| self.level(k)).collect()
    }

    /// The minimal worlds, i.e. the models of the associated beliefs.
    pub fn bottom(&self) -> WorldSet {
        self.level(0)
    }

    pub fn leq(&self, w1: World, w2: World) -> bool {
        self.rank(w1) <= self.rank(w2)
    }

    pub fn lt(&self, w1: World, w2: World) -> bool {
        self.rank(w1) < self.rank(w2)
    }

    /// `min(ws, ≤)`.
    pub fn min_worlds(&self, ws: WorldSet) -> WorldSet {
        match ws.iter().map(|w| self.rank(w)).min() {
            None => WorldSet::EMPTY,
            Some(m) => ws.iter().filter(|&w| self.rank(w) == m).collect(),
        }
    }

    /// Lifted strict order on formulas: every minimal `ψ`-world has a minimal
    /// `φ`-world strictly below it.
    pub fn strictly_precedes(&self, phi: WorldSet, psi: WorldSet) -> bool {
        let (mp, mq) = (self.min_worlds(phi), self.min_worlds(psi));
        mq.iter().all(|w2| mp.iter().any(|w1| self.lt(w1, w2)))
    }

    /// Lifted non-strict order on formulas.
    pub fn precedes(&self, phi: WorldSet, psi: WorldSet) -> bool {
        let (mp, mq) = (self.min_worlds(phi), self.min_worlds(psi));
        mq.iter().all(|w2| mp.iter().any(|w1| self.leq(w1, w2)))
    }

    /// Acceptance of the conditional `(β|α)`: every `α∧¬β`-world has an
    /// `α∧β`-world strictly below it.
    pub fn accepts_conditional(&self, antecedent: WorldSet, consequent: WorldSet) -> bool {
        let good = antecedent & consequent;
        let bad = antecedent - consequent;
        bad.iter().all(|w2| good.iter().any(|w1| self.lt(w1, w2)))
    }

    /// Acceptance of the contractional `(β⁻α)`: `β` is believed and every
    /// `¬α∧¬β`-world has a `¬α∧β`-world strictly below it.
    pub fn accepts_contractional(&self, removed: WorldSet, retained: WorldSet) -> bool {
        if !self.bottom().is_subset(retained) {
            return false;
        }
        let not_removed = removed.complement(self.all_worlds());
        let good = not_removed & retained;
        let bad = not_removed - retained;
        bad.iter().all(|w2| good.iter().any(|w1| self.lt(w1, w2)))
    }

    /// Keeps the relative order of `ws` and drops every other world; the
    /// result is a list of nonempty levels.
    pub fn restricted_levels(&self, ws: WorldSet) -> Vec<WorldSet> {
        let mut levels: Vec<WorldSet> = Vec::new();
        for k in 0..self.height() {
            let l = self.level(k) & ws;
            if !l.is_empty() {
                levels.push(l);
            }
        }
        levels
    }
}

impl fmt::Debug for TotalPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let levels: Vec<Vec<u8>> = self
            .levels()
            .into_iter()
            .map(|l| l.iter().map(|w| w.0).collect())
            .collect();
        write!(f, "TotalPreorder{levels:?}")
    }
}
