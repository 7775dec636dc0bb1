//! Principal ideals, J-classes and enumeration of all two-sided ideals.

use fixedbitset::FixedBitSet;

use super::build::FiniteSemigroup;

/// The J-order of a finite semigroup.
///
/// Nodes are elements; `y` points at `y*s` and `s*y` for every `s`. Strongly
/// connected components are the J-classes and the set reachable from `x` is
/// the principal ideal `S^1 x S^1`.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    /// Class members, classes in reverse topological order (minimal first).
    pub classes: Vec<Vec<usize>>,
    /// Class of each element.
    pub class_of: Vec<usize>,
    /// Principal ideal generated by each class.
    pub principal: Vec<FixedBitSet>,
    /// Directly reachable classes, excluding the class itself.
    pub successors: Vec<Vec<usize>>,
}

impl IdealLattice {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let neighbour = |y: usize, k: usize| if k < n { s.op(y, k) } else { s.op(k - n, y) };
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut on_stack = FixedBitSet::with_capacity(n);
        let mut stack = Vec::new();
        let mut class_of = vec![UNSEEN; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut counter = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack.insert(root);
            while let Some(&mut (v, ref mut k)) = frames.last_mut() {
                if *k < 2 * n {
                    let w = neighbour(v, *k);
                    *k += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack.insert(w);
                        frames.push((w, 0));
                    } else if on_stack.contains(w) {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let c = classes.len();
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack.set(w, false);
                        class_of[w] = c;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    classes.push(members);
                }
            }
        }
        let mut principal: Vec<FixedBitSet> = Vec::with_capacity(classes.len());
        let mut successors = Vec::with_capacity(classes.len());
        let mut last_seen = vec![UNSEEN; classes.len()];
        for (c, members) in classes.iter().enumerate() {
            let mut reach = FixedBitSet::with_capacity(n);
            let mut succ = Vec::new();
            for &y in members {
                reach.insert(y);
                for k in 0..2 * n {
                    let d = class_of[neighbour(y, k)];
                    if d != c && last_seen[d] != c {
                        last_seen[d] = c;
                        succ.push(d);
                    }
                }
            }
            for &d in &succ {
                reach.union_with(&principal[d]);
            }
            succ.sort_unstable();
            principal.push(reach);
            successors.push(succ);
        }
        IdealLattice { classes, class_of, principal, successors }
    }

    /// The principal ideal generated by `x`, sorted.
    pub fn principal_ideal(&self, x: usize) -> Vec<usize> {
        self.principal[self.class_of[x]].ones().collect()
    }

    /// Distinct principal ideals as (generator, members), ordered by size then members.
    pub fn principal_ideals(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> =
            self.classes.iter().enumerate().map(|(c, m)| (m[0], self.principal[c].ones().collect())).collect();
        out.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
        out
    }

    /// Ideals minimal under inclusion; a finite semigroup has exactly one.
    pub fn minimal_ideals(&self) -> Vec<Vec<usize>> {
        (0..self.classes.len())
            .filter(|&c| self.successors[c].is_empty())
            .map(|c| self.principal[c].ones().collect())
            .collect()
    }

    /// True iff some principal ideal is proper.
    pub fn has_proper_ideal(&self) -> bool {
        self.classes.len() > 1
    }

    /// Number of two-sided ideals, or `None` when it exceeds `bound`.
    pub fn count_ideals(&self, bound: u64) -> Option<u64> {
        let mut count = 0u64;
        let mut chosen = vec![false; self.classes.len()];
        if self.walk(0, &mut chosen, &mut |_| {
            count += 1;
            count <= bound
        }) {
            Some(count)
        } else {
            None
        }
    }

    /// Every two-sided ideal as a sorted element list, or `None` past `limit`.
    pub fn all_ideals(&self, limit: usize) -> Option<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut chosen = vec![false; self.classes.len()];
        let complete = self.walk(0, &mut chosen, &mut |chosen: &[bool]| {
            let mut members: Vec<usize> = chosen
                .iter()
                .enumerate()
                .filter(|(_, &c)| c)
                .flat_map(|(c, _)| self.classes[c].iter().copied())
                .collect();
            members.sort_unstable();
            out.push(members);
            out.len() <= limit
        });
        if !complete {
            return None;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Some(out)
    }

    /// Visits every nonempty down-set of classes; stops early when `visit` returns false.
    fn walk(&self, c: usize, chosen: &mut Vec<bool>, visit: &mut dyn FnMut(&[bool]) -> bool) -> bool {
        if c == self.classes.len() {
            return if chosen.iter().any(|&x| x) { visit(chosen) } else { true };
        }
        if !self.walk(c + 1, chosen, visit) {
            return false;
        }
        if self.successors[c].iter().all(|&d| chosen[d]) {
            chosen[c] = true;
            let ok = self.walk(c + 1, chosen, visit);
            chosen[c] = false;
            return ok;
        }
        true
    }
}
