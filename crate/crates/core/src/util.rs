//! Small shared helpers: union-find and canonical partitions.

use std::collections::HashMap;
use std::hash::Hash;

/// Union-find with path compression. The representative of a class is
/// always its least element.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    /// Returns true if the classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        partition_by_key(n, |x| roots[x])
    }
}

/// Groups `0..n` by key. Classes are sorted internally and listed in order
/// of their least element.
pub fn partition_by_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Vec<Vec<usize>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let k = key(x);
        let i = *slot.entry(k).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[i].push(x);
    }
    classes
}

/// For each element, the index of its class.
pub fn class_index(n: usize, classes: &[Vec<usize>]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            idx[x] = i;
        }
    }
    idx
}
