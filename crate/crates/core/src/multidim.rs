//! The k-dimensional matrix product.
//!
//! For `k` square `n x n` matrices `A_1..A_k` the product is the order-`k`
//! tensor `D[i_1,..,i_k] = sum_l A_1[i_1,l] * ... * A_k[i_k,l]`. It is
//! computed by flattening: the first `k1` factors are multiplied row-wise into
//! an `n^k1 x n` matrix, the remaining `k2 = k - k1` into an `n^k2 x n`
//! matrix, and one rectangular product `left * right^T` yields `D` laid out as
//! an `n^k1 x n^k2` matrix.
//!
//! Tuple positions map to flat indices big-endian: the row of
//! `(i_1, .., i_k1)` is `sum_j i_j * n^(k1 - j)`, and the column is formed the
//! same way from the trailing `k2` positions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{Backend, BoolMatrix, IntMatrix};
use crate::Config;

/// A k-dimensional product stored as its `(k1, k2)` flattening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDimProduct {
    k: usize,
    n: usize,
    k1: usize,
    flat: IntMatrix,
}

impl MultiDimProduct {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k - self.k1
    }

    /// The `n^k1 x n^k2` matrix backing the tensor.
    pub fn flat(&self) -> &IntMatrix {
        &self.flat
    }

    /// `D[t_1, .., t_k]`.
    ///
    /// Panics if `t` has the wrong length or an index is `>= n`.
    pub fn entry(&self, t: &[usize]) -> u64 {
        assert_eq!(t.len(), self.k, "tuple length must equal k");
        let (row, col) = t.split_at(self.k1);
        self.flat
            .get(tuple_index(row, self.n), tuple_index(col, self.n))
    }

    /// Entrywise equality regardless of the split each side was stored with.
    pub fn same_tensor(&self, other: &MultiDimProduct) -> bool {
        if self.k != other.k || self.n != other.n {
            return false;
        }
        if self.k1 == other.k1 {
            return self.flat == other.flat;
        }
        let mut equal = true;
        for_each_tuple(self.k, self.n, |t| {
            if equal && self.entry(t) != other.entry(t) {
                equal = false;
            }
        });
        equal
    }
}

/// Big-endian mixed index of `t` in base `n`.
#[inline]
pub fn tuple_index(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &i| {
        debug_assert!(i < n, "index {i} out of range for n = {n}");
        acc * n + i
    })
}

/// Calls `f` on every k-tuple over `0..n` in lexicographic order.
pub fn for_each_tuple(k: usize, n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 && k > 0 {
        return;
    }
    let mut t = vec![0usize; k];
    loop {
        f(&t);
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < n {
                break;
            }
            t[pos] = 0;
        }
    }
}

fn checked_pow(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(n as u128))
}

fn guard_entries(n: usize, k: usize, limit: u64) -> Result<()> {
    let requested = checked_pow(n, k);
    if requested > limit as u128 {
        return Err(Error::MemoryGuard {
            what: "k-dimensional product",
            requested,
            limit,
        });
    }
    Ok(())
}

fn validate(mats: &[IntMatrix]) -> Result<usize> {
    if mats.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 matrices, got {}",
            mats.len()
        )));
    }
    let n = mats[0].rows();
    for (q, m) in mats.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "matrix {q} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_binary() {
            return Err(Error::InvalidInput(format!(
                "matrix {q} has non-0/1 entries"
            )));
        }
    }
    Ok(n)
}

fn validate_split(k: usize, k1: usize) -> Result<()> {
    if k1 == 0 || k1 >= k {
        return Err(Error::InvalidInput(format!(
            "split k1 = {k1} outside [1, {}]",
            k - 1
        )));
    }
    Ok(())
}

/// Row-wise product of a run of factors: row `(i_1..i_m)` of the result is
/// the elementwise product of row `i_j` of factor `j`.
fn stack_rows(factors: &[IntMatrix], n: usize) -> IntMatrix {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        let mut next = IntMatrix::zeros(acc.rows() * n, n);
        for r in 0..acc.rows() {
            let prev = acc.row(r);
            for i in 0..n {
                let out = next.row_mut(r * n + i);
                for ((o, &a), &b) in out.iter_mut().zip(prev).zip(f.row(i)) {
                    *o = a * b;
                }
            }
        }
        acc = next;
    }
    acc
}

fn stack_rows_bits(factors: &[&BoolMatrix], n: usize) -> BoolMatrix {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        let mut next = BoolMatrix::zeros(acc.rows() * n, n);
        for r in 0..acc.rows() {
            for i in 0..n {
                let (prev, cur) = (acc.row_words(r), f.row_words(i));
                for ((o, &a), &b) in next.row_words_mut(r * n + i).iter_mut().zip(prev).zip(cur) {
                    *o = a & b;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Builds the two flattened factors: `left` is `n^k1 x n` with
/// `left[(i_1..i_k1), l] = prod_j mats[j][i_j, l]`, and `right` is
/// `n^k2 x n` built the same way from the trailing matrices.
pub fn flatten(mats: &[IntMatrix], k1: usize) -> Result<(IntMatrix, IntMatrix)> {
    let n = validate(mats)?;
    validate_split(mats.len(), k1)?;
    Ok((stack_rows(&mats[..k1], n), stack_rows(&mats[k1..], n)))
}

/// Bit-packed [`flatten`] for 0/1 factors.
pub fn flatten_bits(mats: &[&BoolMatrix], k1: usize) -> Result<(BoolMatrix, BoolMatrix)> {
    if mats.len() < 2 {
        return Err(Error::InvalidInput("need at least 2 matrices".into()));
    }
    let n = mats[0].rows();
    if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch("factors must all be n x n".into()));
    }
    validate_split(mats.len(), k1)?;
    Ok((
        stack_rows_bits(&mats[..k1], n),
        stack_rows_bits(&mats[k1..], n),
    ))
}

/// k-dimensional product through one rectangular multiplication.
pub fn kdim_product(mats: &[IntMatrix], k1: usize, cfg: &Config) -> Result<MultiDimProduct> {
    let n = validate(mats)?;
    let k = mats.len();
    validate_split(k, k1)?;
    guard_entries(n, k, cfg.max_entries)?;
    let flat = match cfg.backend {
        Backend::Bitset => {
            let packed = mats
                .iter()
                .map(BoolMatrix::from_int)
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&BoolMatrix> = packed.iter().collect();
            let (left, right) = flatten_bits(&refs, k1)?;
            cfg.backend.mul_transpose_bits(&left, &right)?
        }
        backend => {
            let (left, right) = flatten(mats, k1)?;
            backend.mul_transpose(&left, &right)?
        }
    };
    Ok(MultiDimProduct { k, n, k1, flat })
}

/// Evaluates the defining sum directly, one tuple at a time. Stored with the
/// balanced split `k1 = ceil(k / 2)`.
pub fn kdim_product_reference(mats: &[IntMatrix], cfg: &Config) -> Result<MultiDimProduct> {
    let n = validate(mats)?;
    let k = mats.len();
    guard_entries(n, k, cfg.max_entries)?;
    let k1 = k.div_ceil(2);
    let mut flat = IntMatrix::zeros(checked_pow(n, k1) as usize, checked_pow(n, k - k1) as usize);
    for_each_tuple(k, n, |t| {
        let mut sum = 0u64;
        for l in 0..n {
            let mut prod = 1u64;
            for (m, &i) in mats.iter().zip(t) {
                prod *= m.get(i, l);
            }
            sum += prod;
        }
        flat.set(tuple_index(&t[..k1], n), tuple_index(&t[k1..], n), sum);
    });
    Ok(MultiDimProduct { k, n, k1, flat })
}

/// Product of `k` copies of the adjacency matrix of `g`: entry `t` is the
/// number of vertices adjacent to every vertex of `t`. `k1` defaults to
/// `ceil(k / 2)`.
pub fn common_neighbors_tensor(
    g: &Graph,
    k: usize,
    k1: Option<usize>,
    cfg: &Config,
) -> Result<MultiDimProduct> {
    if k < 2 {
        return Err(Error::InvalidInput(format!("k = {k}, need k >= 2")));
    }
    let k1 = k1.unwrap_or(k.div_ceil(2));
    validate_split(k, k1)?;
    let n = g.n();
    guard_entries(n, k, cfg.max_entries)?;
    let flat = match cfg.backend {
        Backend::Bitset => {
            let refs = vec![g.adjacency(); k];
            let (left, right) = flatten_bits(&refs, k1)?;
            cfg.backend.mul_transpose_bits(&left, &right)?
        }
        backend => {
            let a = g.adjacency().to_int();
            let mats = vec![a; k];
            let (left, right) = flatten(&mats, k1)?;
            backend.mul_transpose(&left, &right)?
        }
    };
    Ok(MultiDimProduct { k, n, k1, flat })
}

/// Smallest `l` with `mats[j][tuple[j], l] != 0` for every `j`, or `None`
/// when the product entry at `tuple` is zero. Linear scan over `l`.
///
/// Panics if `tuple` is shorter than `mats` or holds an out-of-range index.
pub fn find_witness(mats: &[IntMatrix], tuple: &[usize]) -> Option<usize> {
    assert_eq!(mats.len(), tuple.len(), "one index per matrix");
    let n = mats.first()?.cols();
    (0..n).find(|&l| mats.iter().zip(tuple).all(|(m, &i)| m.get(i, l) != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::common_neighbor_count;
    use crate::matrix::matmul_naive;
    use crate::rng::GraphRng;

    fn cfg() -> Config {
        Config::default()
    }

    fn random_binary(n: usize, rng: &mut GraphRng) -> IntMatrix {
        IntMatrix::from_fn(n, n, |_, _| rng.bernoulli(0.5) as u64)
    }

    fn adjacency(g: &Graph) -> IntMatrix {
        g.adjacency().to_int()
    }

    #[test]
    fn flatten_examples() {
        let mut rng = GraphRng::new(1);
        let a = random_binary(5, &mut rng);
        let b = random_binary(5, &mut rng);
        let (l, r) = flatten(&[a.clone(), b.clone()], 1).unwrap();
        assert_eq!((l, r), (a, b));

        let ones = IntMatrix::from_fn(2, 2, |_, _| 1);
        let (l, r) = flatten(&[ones.clone(), ones.clone(), ones.clone()], 2).unwrap();
        assert_eq!(l, IntMatrix::from_fn(4, 2, |_, _| 1));
        assert_eq!(r, ones);

        let mats: Vec<IntMatrix> = (0..3).map(|_| random_binary(4, &mut rng)).collect();
        let (l, r) = flatten(&mats, 1).unwrap();
        assert_eq!(l, mats[0]);
        assert_eq!(r.rows(), 16);
        for (j1, j2) in [(0, 0), (1, 3), (3, 2), (2, 1)] {
            for col in 0..4 {
                assert_eq!(
                    r.get(j1 * 4 + j2, col),
                    mats[1].get(j1, col) * mats[2].get(j2, col)
                );
            }
        }
    }

    #[test]
    fn flatten_rejects_bad_input() {
        let a = IntMatrix::identity(3);
        assert!(matches!(
            flatten(std::slice::from_ref(&a), 1),
            Err(Error::InvalidInput(_))
        ));
        assert!(flatten(&[a.clone(), a.clone()], 0).is_err());
        assert!(flatten(&[a.clone(), a.clone()], 2).is_err());
        assert!(matches!(
            flatten(&[a.clone(), IntMatrix::identity(4)], 1),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            flatten(&[a.clone(), IntMatrix::zeros(3, 2)], 1),
            Err(Error::DimensionMismatch(_))
        ));
        let two = IntMatrix::from_fn(3, 3, |_, _| 2);
        assert!(matches!(flatten(&[a, two], 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn two_dims_is_product_with_transpose() {
        let mut rng = GraphRng::new(2);
        let a = random_binary(7, &mut rng);
        let b = random_binary(7, &mut rng);
        let d = kdim_product(&[a.clone(), b.clone()], 1, &cfg()).unwrap();
        let c = matmul_naive(&a, &b.transpose()).unwrap();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(d.entry(&[i, j]), c.get(i, j));
            }
        }
    }

    #[test]
    fn k4_triple_entry() {
        let a = adjacency(&Graph::complete(4));
        let d = kdim_product(&[a.clone(), a.clone(), a.clone()], 2, &cfg()).unwrap();
        assert_eq!(d.entry(&[0, 1, 2]), 1);
        assert_eq!(
            find_witness(&[a.clone(), a.clone(), a], &[0, 1, 2]),
            Some(3)
        );
    }

    #[test]
    fn splits_agree_with_reference() {
        let mut rng = GraphRng::new(6);
        let mats: Vec<IntMatrix> = (0..3).map(|_| random_binary(6, &mut rng)).collect();
        let reference = kdim_product_reference(&mats, &cfg()).unwrap();
        for k1 in 1..=2 {
            let d = kdim_product(&mats, k1, &cfg()).unwrap();
            assert!(d.same_tensor(&reference), "k1 = {k1}");
        }
        let mats4: Vec<IntMatrix> = (0..4).map(|_| random_binary(4, &mut rng)).collect();
        let d = kdim_product(&mats4, 2, &cfg()).unwrap();
        assert_eq!(d, kdim_product_reference(&mats4, &cfg()).unwrap());
    }

    #[test]
    fn reference_closed_forms() {
        for k in 2..=4 {
            for n in 1..=4 {
                let zeros = vec![IntMatrix::zeros(n, n); k];
                let z = kdim_product_reference(&zeros, &cfg()).unwrap();
                assert!(z.flat().as_slice().iter().all(|&v| v == 0));
                let ones = vec![IntMatrix::from_fn(n, n, |_, _| 1); k];
                let o = kdim_product_reference(&ones, &cfg()).unwrap();
                assert!(o.flat().as_slice().iter().all(|&v| v == n as u64));
            }
        }
    }

    #[test]
    fn all_backends_agree() {
        let mut rng = GraphRng::new(17);
        let mats: Vec<IntMatrix> = (0..3).map(|_| random_binary(9, &mut rng)).collect();
        let reference = kdim_product_reference(&mats, &cfg()).unwrap();
        for backend in [
            Backend::Naive,
            Backend::Blocked { tile: 5 },
            Backend::Bitset,
        ] {
            let c = Config { backend, ..cfg() };
            for k1 in 1..=2 {
                assert!(kdim_product(&mats, k1, &c).unwrap().same_tensor(&reference));
            }
            let g = Graph::gnp(9, 0.5, 3).unwrap();
            let a = adjacency(&g);
            let t = common_neighbors_tensor(&g, 3, None, &c).unwrap();
            assert!(t.same_tensor(&kdim_product_reference(&[a.clone(), a.clone(), a], &c).unwrap()));
        }
    }

    #[test]
    fn memory_guard_trips() {
        let tight = Config {
            max_entries: 100,
            ..cfg()
        };
        let a = IntMatrix::identity(5);
        let mats = vec![a.clone(), a.clone(), a];
        assert!(matches!(
            kdim_product(&mats, 1, &tight),
            Err(Error::MemoryGuard { .. })
        ));
        assert!(matches!(
            kdim_product_reference(&mats, &tight),
            Err(Error::MemoryGuard { .. })
        ));
        assert!(matches!(
            common_neighbors_tensor(&Graph::empty(5), 3, None, &tight),
            Err(Error::MemoryGuard { .. })
        ));
        // 5^2 = 25 entries fit.
        assert!(common_neighbors_tensor(&Graph::empty(5), 2, None, &tight).is_ok());
    }

    #[test]
    fn common_neighbor_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(
            common_neighbors_tensor(&k4, 3, None, &cfg())
                .unwrap()
                .entry(&[0, 1, 2]),
            1
        );
        let c5 = Graph::cycle(5);
        assert_eq!(
            common_neighbors_tensor(&c5, 2, None, &cfg())
                .unwrap()
                .entry(&[0, 2]),
            1
        );

        let g = Graph::gnp(12, 0.5, 4).unwrap();
        let d = common_neighbors_tensor(&g, 3, None, &cfg()).unwrap();
        for_each_tuple(3, 12, |t| {
            let direct = (0..12)
                .filter(|&w| t.iter().all(|&v| g.has_edge(v, w)))
                .count() as u64;
            assert_eq!(d.entry(t), direct);
            assert_eq!(d.entry(t), common_neighbor_count(&g, t));
        });
        assert!(common_neighbors_tensor(&g, 1, None, &cfg()).is_err());
        assert!(common_neighbors_tensor(&g, 3, Some(3), &cfg()).is_err());
    }

    #[test]
    fn witness_examples() {
        let ones = IntMatrix::from_fn(4, 4, |_, _| 1);
        assert_eq!(
            find_witness(&[ones.clone(), ones.clone(), ones], &[3, 1, 2]),
            Some(0)
        );
        let c5 = adjacency(&Graph::cycle(5));
        assert_eq!(
            find_witness(&[c5.clone(), c5.clone(), c5], &[0, 1, 2]),
            None
        );
    }

    #[test]
    fn tuple_iteration_order() {
        let mut seen = Vec::new();
        for_each_tuple(2, 3, |t| seen.push(tuple_index(t, 3)));
        assert_eq!(seen, (0..9).collect::<Vec<_>>());
        let mut count = 0;
        for_each_tuple(3, 0, |_| count += 1);
        assert_eq!(count, 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn permutations(t: &[usize]) -> Vec<Vec<usize>> {
            if t.len() <= 1 {
                return vec![t.to_vec()];
            }
            let mut out = Vec::new();
            for i in 0..t.len() {
                let mut rest = t.to_vec();
                let x = rest.remove(i);
                for mut p in permutations(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn reduction_matches_definition(k in 2usize..=4, n in 2usize..=8, seed in any::<u64>()) {
                let mut rng = GraphRng::new(seed);
                let mats: Vec<IntMatrix> = (0..k).map(|_| random_binary(n, &mut rng)).collect();
                let reference = kdim_product_reference(&mats, &cfg()).unwrap();
                for k1 in 1..k {
                    prop_assert!(kdim_product(&mats, k1, &cfg()).unwrap().same_tensor(&reference));
                }
            }

            #[test]
            fn symmetric_inputs_give_symmetric_tensor(n in 2usize..=7, p in 0.0f64..1.0, seed in any::<u64>()) {
                let g = Graph::gnp(n, p, seed).unwrap();
                let d = common_neighbors_tensor(&g, 3, None, &cfg()).unwrap();
                let mut ok = true;
                for_each_tuple(3, n, |t| {
                    let v = d.entry(t);
                    for perm in permutations(t) {
                        ok &= d.entry(&perm) == v;
                    }
                });
                prop_assert!(ok);
            }

            #[test]
            fn entries_bounded_by_outside_vertices(n in 2usize..=9, p in 0.0f64..=1.0, seed in any::<u64>()) {
                let g = Graph::gnp(n, p, seed).unwrap();
                let d = common_neighbors_tensor(&g, 3, None, &cfg()).unwrap();
                let mut ok = true;
                for_each_tuple(3, n, |t| {
                    let mut distinct = t.to_vec();
                    distinct.sort_unstable();
                    distinct.dedup();
                    ok &= d.entry(t) <= (n - distinct.len()) as u64;
                });
                prop_assert!(ok);
            }

            #[test]
            fn witnesses_are_sound(k in 2usize..=4, n in 1usize..=10, density in 0.1f64..0.9, seed in any::<u64>()) {
                let mut rng = GraphRng::new(seed);
                let mats: Vec<IntMatrix> = (0..k)
                    .map(|_| IntMatrix::from_fn(n, n, |_, _| rng.bernoulli(density) as u64))
                    .collect();
                let d = kdim_product_reference(&mats, &cfg()).unwrap();
                let t: Vec<usize> = (0..k).map(|_| rng.below(n as u64) as usize).collect();
                match find_witness(&mats, &t) {
                    Some(l) => {
                        prop_assert!(mats.iter().zip(&t).all(|(m, &i)| m.get(i, l) == 1));
                        prop_assert!((0..l).all(|e| mats.iter().zip(&t).any(|(m, &i)| m.get(i, e) == 0)));
                    }
                    None => prop_assert_eq!(d.entry(&t), 0),
                }
            }
        }
    }
}
