//! Static 3-d tree over points on the unit sphere, used for nearest-neighbour
//! queries in the chordal metric (which is the Euclidean metric of R³ there).

const LEAF_SIZE: usize = 8;

#[derive(Debug)]
enum Node {
    Leaf { start: usize, end: usize },
    Split { axis: usize, value: f64, left: Box<Node>, right: Box<Node> },
}

#[derive(Debug)]
pub(crate) struct KdTree {
    coords: Vec<[f64; 3]>,
    index: Vec<usize>,
    root: Node,
}

fn dist2(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let (dx, dy, dz) = (a[0] - b[0], a[1] - b[1], a[2] - b[2]);
    dx * dx + dy * dy + dz * dz
}

impl KdTree {
    pub(crate) fn build(points: &[[f64; 3]]) -> Self {
        let mut index: Vec<usize> = (0..points.len()).collect();
        let root = Self::build_node(points, &mut index, 0);
        KdTree { coords: points.to_vec(), index, root }
    }

    fn build_node(points: &[[f64; 3]], index: &mut [usize], offset: usize) -> Node {
        let len = index.len();
        if len <= LEAF_SIZE {
            return Node::Leaf { start: offset, end: offset + len };
        }
        // split on the axis of largest spread
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for &i in index.iter() {
            for k in 0..3 {
                lo[k] = lo[k].min(points[i][k]);
                hi[k] = hi[k].max(points[i][k]);
            }
        }
        let axis = (0..3)
            .max_by(|&a, &b| (hi[a] - lo[a]).total_cmp(&(hi[b] - lo[b])))
            .unwrap();
        if hi[axis] - lo[axis] == 0.0 {
            return Node::Leaf { start: offset, end: offset + len };
        }
        let mid = len / 2;
        index.select_nth_unstable_by(mid, |&a, &b| points[a][axis].total_cmp(&points[b][axis]));
        let value = points[index[mid]][axis];
        let (l, r) = index.split_at_mut(mid);
        let left = Box::new(Self::build_node(points, l, offset));
        let right = Box::new(Self::build_node(points, r, offset + mid));
        Node::Split { axis, value, left, right }
    }

    /// Index (into the build slice) of a nearest point to `q`.
    pub(crate) fn nearest(&self, q: &[f64; 3]) -> usize {
        let mut best = (f64::INFINITY, usize::MAX);
        self.search(&self.root, q, &mut best);
        best.1
    }

    fn search(&self, node: &Node, q: &[f64; 3], best: &mut (f64, usize)) {
        match node {
            Node::Leaf { start, end } => {
                for &i in &self.index[*start..*end] {
                    let d = dist2(&self.coords[i], q);
                    if d < best.0 || (d == best.0 && i < best.1) {
                        *best = (d, i);
                    }
                }
            }
            Node::Split { axis, value, left, right } => {
                let delta = q[*axis] - value;
                let (near, far) = if delta < 0.0 { (left, right) } else { (right, left) };
                self.search(near, q, best);
                if delta * delta <= best.0 {
                    self.search(far, q, best);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matches_linear_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<[f64; 3]> = (0..700)
            .map(|_| [rng.random::<f64>(), rng.random::<f64>(), (rng.random::<f64>() * 4.0).floor()])
            .collect();
        let tree = KdTree::build(&pts);
        for _ in 0..300 {
            let q = [rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>() * 4.0];
            let got = tree.nearest(&q);
            let want = (0..pts.len())
                .min_by(|&a, &b| dist2(&pts[a], &q).total_cmp(&dist2(&pts[b], &q)))
                .unwrap();
            assert_eq!(dist2(&pts[got], &q), dist2(&pts[want], &q));
        }
    }

    #[test]
    fn identical_points() {
        let pts = vec![[0.0, 0.0, 1.0]; 50];
        let tree = KdTree::build(&pts);
        assert_eq!(tree.nearest(&[0.0, 0.0, 0.0]), 0);
    }
}
