/// Union-find with union by size, no path compression and an undo trail.
///
/// Each root also threads its members into a circular list through `next`,
/// so a component can be walked without scanning all vertices.
#[derive(Clone, Debug)]
pub struct RollbackUnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    next: Vec<u32>,
    /// `(child root, parent root)` for every union still in effect.
    trail: Vec<(u32, u32)>,
    components: usize,
}

impl RollbackUnionFind {
    pub fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            next: (0..n as u32).collect(),
            trail: Vec::new(),
            components: n,
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn size_of_root(&self, root: usize) -> usize {
        self.size[root] as usize
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Merges the components of two distinct roots.
    pub fn union_roots(&mut self, ra: usize, rb: usize) {
        debug_assert!(ra != rb && self.parent[ra] as usize == ra && self.parent[rb] as usize == rb);
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big as u32;
        self.size[big] += self.size[small];
        self.next.swap(big, small);
        self.trail.push((small as u32, big as u32));
        self.components -= 1;
    }

    /// Undoes the most recent union.
    pub fn undo(&mut self) {
        let (small, big) = self.trail.pop().expect("nothing to undo");
        let (small, big) = (small as usize, big as usize);
        self.next.swap(big, small);
        self.size[big] -= self.size[small];
        self.parent[small] = small as u32;
        self.components += 1;
    }

    /// Members of the component whose root is `root`.
    pub fn members(&self, root: usize) -> impl Iterator<Item = usize> + '_ {
        let mut cur = root;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = cur;
            cur = self.next[cur] as usize;
            done = cur == root;
            Some(out)
        })
    }
}
