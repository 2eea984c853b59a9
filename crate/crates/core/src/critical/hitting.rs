//! Exact minimum hitting set by branch and bound.
//!
//! Sizes here are tiny (a family per failed tree edge, a few hundred sets
//! at most), so sets are plain sorted index vectors.

/// Drops duplicate sets and every set that contains another one; a hitting
/// set for the survivors hits the whole family.
pub fn reduce_family(family: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(k, &s)) {
            kept.push(s);
        }
    }
    kept
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// A minimum-cardinality set of elements intersecting every member of
/// `family`. `incumbent`, if given, must be a valid hitting set and seeds
/// the upper bound. Returns `None` if some member is empty.
pub fn min_hitting_set(family: &[Vec<usize>], incumbent: Option<&[usize]>) -> Option<Vec<usize>> {
    let sets = reduce_family(family);
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    let universe = sets.iter().flatten().max().map_or(0, |&m| m + 1);
    let mut best: Vec<usize> = match incumbent {
        Some(inc) if hits_all(&sets, inc) => {
            let mut v = inc.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        }
        _ => sets
            .iter()
            .map(|s| s[0])
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    let mut search = Search {
        sets: &sets,
        chosen: vec![false; universe.max(best.iter().max().map_or(0, |&m| m + 1))],
        stack: Vec::new(),
    };
    search.branch(&mut best);
    best.sort_unstable();
    Some(best)
}

fn hits_all(sets: &[Vec<usize>], chosen: &[usize]) -> bool {
    sets.iter().all(|s| s.iter().any(|x| chosen.contains(x)))
}

struct Search<'a> {
    sets: &'a [Vec<usize>],
    chosen: Vec<bool>,
    stack: Vec<usize>,
}

impl Search<'_> {
    fn is_hit(&self, s: &[usize]) -> bool {
        s.iter().any(|&x| self.chosen[x])
    }

    /// Greedy packing of pairwise disjoint unhit sets; each needs its own
    /// element.
    fn lower_bound(&self) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut count = 0;
        for s in self.sets {
            if self.is_hit(s) || s.iter().any(|&x| used[x]) {
                continue;
            }
            for &x in s {
                used[x] = true;
            }
            count += 1;
        }
        count
    }

    fn branch(&mut self, best: &mut Vec<usize>) {
        let pick = self
            .sets
            .iter()
            .filter(|s| !self.is_hit(s))
            .min_by_key(|s| s.len());
        let Some(pick) = pick else {
            if self.stack.len() < best.len() {
                *best = self.stack.clone();
            }
            return;
        };
        if self.stack.len() + self.lower_bound() >= best.len() {
            return;
        }
        for &x in pick {
            self.chosen[x] = true;
            self.stack.push(x);
            self.branch(best);
            self.stack.pop();
            self.chosen[x] = false;
        }
    }
}
