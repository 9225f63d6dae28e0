use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Index of a world. World `0` makes every atom true; atom `i` of an
/// `n`-atom signature is false exactly when bit `n - 1 - i` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World(pub u8);

impl World {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of worlds stored as a bitmask (at most 64 worlds).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldSet(pub u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    /// All worlds of a space with `world_count` worlds.
    pub fn full(world_count: usize) -> WorldSet {
        if world_count >= 64 {
            WorldSet(u64::MAX)
        } else {
            WorldSet((1u64 << world_count) - 1)
        }
    }

    pub fn singleton(w: World) -> WorldSet {
        WorldSet(1u64 << w.0)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, w: World) -> bool {
        self.0 >> w.0 & 1 == 1
    }

    pub fn insert(&mut self, w: World) {
        self.0 |= 1u64 << w.0;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: WorldSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to `universe`.
    pub fn complement(self, universe: WorldSet) -> WorldSet {
        WorldSet(universe.0 & !self.0)
    }

    /// Worlds in ascending canonical order.
    pub fn iter(self) -> impl Iterator<Item = World> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let w = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            Some(World(w))
        })
    }

    pub fn first(self) -> Option<World> {
        self.iter().next()
    }
}

impl BitAnd for WorldSet {
    type Output = WorldSet;
    fn bitand(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 & rhs.0)
    }
}

impl BitOr for WorldSet {
    type Output = WorldSet;
    fn bitor(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 | rhs.0)
    }
}

impl Sub for WorldSet {
    type Output = WorldSet;
    fn sub(self, rhs: WorldSet) -> WorldSet {
        WorldSet(self.0 & !rhs.0)
    }
}

impl FromIterator<World> for WorldSet {
    fn from_iter<I: IntoIterator<Item = World>>(iter: I) -> Self {
        let mut s = WorldSet::EMPTY;
        for w in iter {
            s.insert(w);
        }
        s
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|w| w.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: WorldSet = [World(0), World(2)].into_iter().collect();
        let b: WorldSet = [World(2), World(3)].into_iter().collect();
        assert_eq!((a & b).iter().collect::<Vec<_>>(), vec![World(2)]);
        assert_eq!((a | b).len(), 3);
        assert_eq!((a - b), WorldSet::singleton(World(0)));
        assert_eq!(a.complement(WorldSet::full(4)), WorldSet(0b1010));
        assert!(WorldSet::EMPTY.is_subset(a));
        assert!(!a.is_subset(b));
    }
}
