//! Union-find that tracks the parity of each element relative to its root.

/// Disjoint sets with a parity bit along every tree edge. `union(a, b, p)`
/// records `color(a) ^ color(b) == p`, failing if that contradicts what is
/// already known.
#[derive(Clone, Debug)]
pub struct ParityUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    // parity of a node relative to its parent
    parity: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityConflict;

impl ParityUnionFind {
    pub fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // compress, processing nodes nearest the root first
        let mut acc = 0u8;
        for &node in path.iter().rev() {
            acc ^= self.parity[node];
            self.parity[node] = acc;
            self.parent[node] = root;
        }
        (root, if path.is_empty() { 0 } else { self.parity[x] })
    }

    pub fn union(&mut self, a: usize, b: usize, parity: u8) -> Result<(), ParityConflict> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return if pa ^ pb == parity { Ok(()) } else { Err(ParityConflict) };
        }
        let link = pa ^ pb ^ parity;
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        self.parity[child] = link;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
        }
        Ok(())
    }

    /// `color(a) ^ color(b)` when both are in the same set.
    pub fn parity_between(&mut self, a: usize, b: usize) -> Option<u8> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb).then_some(pa ^ pb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_triangle_conflicts() {
        let mut uf = ParityUnionFind::new(3);
        uf.union(0, 1, 1).unwrap();
        uf.union(1, 2, 1).unwrap();
        assert_eq!(uf.parity_between(0, 2), Some(0));
        assert_eq!(uf.union(2, 0, 1), Err(ParityConflict));
        assert!(uf.union(2, 0, 0).is_ok());
    }

    #[test]
    fn long_chain_parity() {
        let n = 50;
        let mut uf = ParityUnionFind::new(n);
        for i in 1..n {
            uf.union(i - 1, i, 1).unwrap();
        }
        for i in 0..n {
            assert_eq!(uf.parity_between(0, i), Some((i % 2) as u8));
        }
        let mut fresh = ParityUnionFind::new(2);
        assert_eq!(fresh.parity_between(0, 1), None);
    }
}
