use crate::logic::WorldSet;

use super::preorder::TotalPreorder;
use super::OrderError;

/// Largest world count accepted by [`enumerate_preorders`].
pub const MAX_ENUMERATED_WORLDS: usize = 8;

/// Streams every total preorder over `world_count` worlds.
///
/// Preorders are produced as ordered set partitions: level 0 ranges over the
/// nonempty subsets of the worlds in ascending bitmask order, then the
/// remaining worlds are partitioned recursively.
pub fn enumerate_preorders(world_count: usize) -> Result<PreorderIter, OrderError> {
    if world_count == 0 || world_count > MAX_ENUMERATED_WORLDS {
        return Err(OrderError::EnumerationScope(world_count));
    }
    Ok(PreorderIter {
        world_count,
        stack: Vec::new(),
        started: false,
    })
}

struct Frame {
    remaining: u64,
    chosen: u64,
}

pub struct PreorderIter {
    world_count: usize,
    stack: Vec<Frame>,
    started: bool,
}

impl PreorderIter {
    fn descend(&mut self) {
        while let Some(top) = self.stack.last() {
            let rest = top.remaining & !top.chosen;
            if rest == 0 {
                break;
            }
            self.stack.push(Frame {
                remaining: rest,
                chosen: rest & rest.wrapping_neg(),
            });
        }
    }

    fn advance(&mut self) {
        while let Some(top) = self.stack.last_mut() {
            top.chosen = top.chosen.wrapping_sub(top.remaining) & top.remaining;
            if top.chosen != 0 {
                return;
            }
            self.stack.pop();
        }
    }
}

impl Iterator for PreorderIter {
    type Item = TotalPreorder;

    fn next(&mut self) -> Option<TotalPreorder> {
        if !self.started {
            self.started = true;
            let full = WorldSet::full(self.world_count).bits();
            self.stack.push(Frame {
                remaining: full,
                chosen: full & full.wrapping_neg(),
            });
        } else {
            self.advance();
        }
        if self.stack.is_empty() {
            return None;
        }
        self.descend();
        let mut ranks = vec![0u8; self.world_count];
        for (k, frame) in self.stack.iter().enumerate() {
            for w in WorldSet(frame.chosen).iter() {
                ranks[w.index()] = k as u8;
            }
        }
        Some(TotalPreorder::from_normalized(ranks))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ordered_bell_numbers() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_preorders(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 3, 13, 75, 541]);
    }

    #[test]
    fn no_duplicates() {
        let all: Vec<TotalPreorder> = enumerate_preorders(4).unwrap().collect();
        let set: HashSet<&TotalPreorder> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn scope() {
        assert!(enumerate_preorders(9).is_err());
        assert!(enumerate_preorders(0).is_err());
    }
}
