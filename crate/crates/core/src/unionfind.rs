/// Union-find with union by size and an undo log (no path compression, so
/// every union can be rolled back in O(1)).
#[derive(Debug, Clone)]
pub struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        RollbackUnionFind { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; always pushes one undo record.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.log.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.log.push(Some((ra, rb)));
        true
    }

    /// Undoes the most recent [`union`](Self::union).
    pub fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.log.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }
}
