use super::FiniteLattice;

/// Searches for a sublattice of `host` isomorphic to `pattern`, returning the
/// first embedding in lexicographic order of images.
pub fn find_sublattice_embedding(
    pattern: &FiniteLattice,
    host: &FiniteLattice,
) -> Option<Vec<usize>> {
    if pattern.size() > host.size() {
        return None;
    }
    let n = pattern.size();
    // Pairs whose join is `j`, checked once `j` has an image.
    let mut joins_to: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in x + 1..n {
            let j = pattern.join(x, y);
            if j != x && j != y {
                joins_to[j].push((x, y));
            }
        }
    }
    let mut state = State {
        pattern,
        host,
        joins_to,
        map: Vec::with_capacity(n),
        used: vec![false; host.size()],
    };
    state.extend().then_some(state.map)
}

struct State<'a> {
    pattern: &'a FiniteLattice,
    host: &'a FiniteLattice,
    joins_to: Vec<Vec<(usize, usize)>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl State<'_> {
    fn extend(&mut self) -> bool {
        let x = self.map.len();
        if x == self.pattern.size() {
            return true;
        }
        for y in 0..self.host.size() {
            if self.used[y] || !self.fits(x, y) {
                continue;
            }
            self.map.push(y);
            self.used[y] = true;
            if self.extend() {
                return true;
            }
            self.used[y] = false;
            self.map.pop();
        }
        false
    }

    fn fits(&self, x: usize, y: usize) -> bool {
        let (p, h) = (self.pattern, self.host);
        for (w, &v) in self.map.iter().enumerate() {
            if p.leq(w, x) != h.leq(v, y) || p.leq(x, w) != h.leq(y, v) {
                return false;
            }
            // Pattern indices form a linear extension, so the meet of `w`
            // and `x` is already mapped.
            let m = p.meet(w, x);
            if m != x && self.map[m] != h.meet(v, y) {
                return false;
            }
        }
        self.joins_to[x]
            .iter()
            .all(|&(a, b)| h.join(self.map[a], self.map[b]) == y)
    }
}
