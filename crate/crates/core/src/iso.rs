use crate::matroid::BinaryMatroid;

/// Number of points `q` with `p + q` also a point (twice the number of
/// triangles through `p`).
fn triangle_degrees(m: &BinaryMatroid) -> Vec<(u64, usize)> {
    let raw = m.raw();
    raw.iter()
        .map(|p| (p, raw.iter().filter(|&q| raw.contains(p ^ q)).count()))
        .collect()
}

struct Search<'a> {
    left: &'a BinaryMatroid,
    right: &'a BinaryMatroid,
    basis: Vec<u64>,
    basis_degree: Vec<usize>,
    right_by_degree: Vec<(u64, usize)>,
    // span of the first j basis vectors and of their images, indexed alike
    pre: Vec<u64>,
    img: Vec<u64>,
}

impl Search<'_> {
    fn extend(&mut self, j: usize) -> bool {
        if j == self.basis.len() {
            return true;
        }
        let b = self.basis[j];
        let half = self.pre.len();
        for idx in 0..self.right_by_degree.len() {
            let (y, deg) = self.right_by_degree[idx];
            if deg != self.basis_degree[j] || self.img[..half].contains(&y) {
                continue;
            }
            // y must be independent of the images so far: y not in their span
            let mut ok = true;
            for i in 0..half {
                let x = self.pre[i] ^ b;
                let fx = self.img[i] ^ y;
                if fx == 0 || self.left.raw().contains(x) != self.right.raw().contains(fx) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for i in 0..half {
                let (x, fx) = (self.pre[i] ^ b, self.img[i] ^ y);
                self.pre.push(x);
                self.img.push(fx);
            }
            if self.extend(j + 1) {
                return true;
            }
            self.pre.truncate(half);
            self.img.truncate(half);
        }
        false
    }
}

/// Whether some invertible linear map of the ambient space carries the points
/// of `a` onto the points of `b`.
pub fn is_isomorphic(a: &BinaryMatroid, b: &BinaryMatroid) -> bool {
    if a.ambient_rank() != b.ambient_rank() || a.len() != b.len() {
        return false;
    }
    if a.rank() != b.rank() || a.odd_girth() != b.odd_girth() {
        return false;
    }
    let da = triangle_degrees(a);
    let db = triangle_degrees(b);
    let mut ha: Vec<usize> = da.iter().map(|d| d.1).collect();
    let mut hb: Vec<usize> = db.iter().map(|d| d.1).collect();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return false;
    }
    if a.critical_number().0 != b.critical_number().0 {
        return false;
    }

    // greedy basis of `a`: each step takes the point whose addition
    // captures the most points in the span, so pruning bites early
    let mut basis: Vec<u64> = Vec::new();
    let mut span: Vec<u64> = vec![0];
    let mut basis_degree = Vec::new();
    loop {
        let mut best: Option<(usize, usize, u64, usize)> = None;
        for &(p, deg) in &da {
            if span.contains(&p) {
                continue;
            }
            let captured = span.iter().filter(|&&s| a.raw().contains(s ^ p)).count();
            let rarity = da.iter().filter(|d| d.1 == deg).count();
            let key = (captured, usize::MAX - rarity, p, deg);
            if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
                best = Some(key);
            }
        }
        let Some((_, _, p, deg)) = best else { break };
        let extra: Vec<u64> = span.iter().map(|s| s ^ p).collect();
        span.extend(extra);
        basis.push(p);
        basis_degree.push(deg);
    }

    let mut search = Search {
        left: a,
        right: b,
        basis,
        basis_degree,
        right_by_degree: db,
        pre: vec![0],
        img: vec![0],
    };
    search.extend(0)
}
