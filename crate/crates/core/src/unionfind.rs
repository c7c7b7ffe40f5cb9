//! Disjoint sets with an optional per-class mark.
//!
//! Marks are OR-ed on union. The arrangement module uses them to record which
//! classes contain a slot whose framing root vanishes, which is all that is
//! needed to read off the rank of a set of covectors of the form
//! `e_p - e_q` and `e_p`.

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    marked: Vec<bool>,
    classes: usize,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
            marked: vec![false; len],
            classes: len,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Returns `true` if `a` and `b` were in different classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.marked[a] |= self.marked[b];
        self.classes -= 1;
        true
    }

    pub fn mark(&mut self, x: usize) {
        let root = self.find(x);
        self.marked[root] = true;
    }

    pub fn is_marked(&mut self, x: usize) -> bool {
        let root = self.find(x);
        self.marked[root]
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn marked_classes(&self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.parent[i] == i && self.marked[i])
            .count()
    }

    /// Rank of the covector family this structure was fed: one per merge that
    /// joined two classes plus one per marked class.
    pub fn anchored_rank(&self) -> usize {
        self.len() - self.classes + self.marked_classes()
    }

    /// Class representative of every element, as dense labels `0..classes`
    /// numbered in order of first appearance.
    pub fn labels(&mut self) -> Vec<usize> {
        let mut label_of_root = vec![usize::MAX; self.len()];
        let mut next = 0;
        (0..self.len())
            .map(|i| {
                let r = self.find(i);
                if label_of_root[r] == usize::MAX {
                    label_of_root[r] = next;
                    next += 1;
                }
                label_of_root[r]
            })
            .collect()
    }
}
