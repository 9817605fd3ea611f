use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::Zero;

use super::{check_cap, raising_pairs, WeightModule};
use crate::error::{KpError, Result};
use crate::linalg::{nullspace, Echelon, SparseMatrix, SparseVec};
use crate::permcomb::Weight;

/// Which operators a closure is taken under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Closure {
    /// The simple raising operators `e_{i,i+1}`; yields a `b_n`-submodule.
    Simple,
    /// Simple raising and stored simple lowering operators; yields a `gl_n`-submodule.
    All,
}

/// A submodule together with its embedding into the ambient module.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub module: WeightModule,
    /// Ambient coordinates of each basis vector of `module`.
    pub embedding: Vec<SparseVec>,
    spaces: BTreeMap<Weight, (Echelon, usize)>,
    ambient_weights: Vec<Weight>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Coordinates in the submodule basis of an ambient vector, if it lies in the submodule.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut by_weight: BTreeMap<&Weight, SparseVec> = BTreeMap::new();
        for (i, c) in v.iter() {
            by_weight
                .entry(&self.ambient_weights[i])
                .or_default()
                .add_at(i, c);
        }
        let mut out = SparseVec::new();
        for (w, comp) in by_weight {
            let (ech, offset) = self.spaces.get(w)?;
            if !ech.contains(&comp) {
                return None;
            }
            for (k, (p, _)) in ech.canonical_rows().enumerate() {
                out.add_at(offset + k, &comp.get(p));
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// The inclusion map into the ambient module.
    pub fn inclusion(&self) -> ModuleMap {
        ModuleMap {
            matrix: SparseMatrix {
                nrows: self.ambient_weights.len(),
                cols: self.embedding.clone(),
            },
        }
    }
}

fn closure_ops(m: &WeightModule, mode: Closure) -> Vec<(usize, usize)> {
    let mut ops: Vec<(usize, usize)> = (1..m.n()).map(|i| (i, i + 1)).collect();
    if mode == Closure::All {
        ops.extend((1..m.n()).map(|i| (i + 1, i)).filter(|&(i, j)| m.op(i, j).is_some()));
    }
    ops
}

fn check_vector(m: &WeightModule, v: &SparseVec) -> Result<()> {
    match v.max_index() {
        Some(i) if i >= m.dim() => Err(KpError::VectorDimension {
            expected: m.dim(),
            got: i + 1,
        }),
        _ => Ok(()),
    }
}

/// Smallest submodule containing `gens`, closed under the operators selected by `mode`.
///
/// The basis is the reduced echelon basis of each weight space, weights in
/// lexicographic order.
pub fn generated_submodule(m: &WeightModule, gens: &[SparseVec], mode: Closure) -> Result<Submodule> {
    for v in gens {
        check_vector(m, v)?;
    }
    let ops = closure_ops(m, mode);
    let roots: Vec<Weight> = ops.iter().map(|&(i, j)| Weight::root(m.n(), i, j)).collect();
    let mut spaces: BTreeMap<Weight, Echelon> = BTreeMap::new();
    let mut queue: VecDeque<(Weight, SparseVec)> = VecDeque::new();
    let mut total = 0usize;
    for v in gens {
        for (w, comp) in m.weight_components(v) {
            if spaces.entry(w.clone()).or_default().insert(comp.clone()) {
                total += 1;
                check_cap(total)?;
                queue.push_back((w, comp));
            }
        }
    }
    while let Some((w, v)) = queue.pop_front() {
        for (k, &(i, j)) in ops.iter().enumerate() {
            let y = m.act(i, j, &v).expect("closure operator is stored");
            if y.is_zero() {
                continue;
            }
            let target = w.add(&roots[k]);
            if spaces.entry(target.clone()).or_default().insert(y.clone()) {
                total += 1;
                check_cap(total)?;
                queue.push_back((target, y));
            }
        }
    }
    Ok(assemble(m, spaces, mode))
}

fn assemble(m: &WeightModule, spaces: BTreeMap<Weight, Echelon>, mode: Closure) -> Submodule {
    let mut weights = Vec::new();
    let mut embedding = Vec::new();
    let mut indexed = BTreeMap::new();
    for (w, ech) in spaces {
        if ech.is_empty() {
            continue;
        }
        let offset = embedding.len();
        for (_, row) in ech.canonical_rows() {
            weights.push(w.clone());
            embedding.push(row.clone());
        }
        indexed.insert(w, (ech, offset));
    }
    let dim = embedding.len();
    let mut ops = BTreeMap::new();
    for ((i, j), e) in m.ops() {
        if mode == Closure::Simple && i > j {
            continue;
        }
        let root = Weight::root(m.n(), i, j);
        let cols = embedding
            .iter()
            .zip(&weights)
            .map(|(b, w)| {
                let y = e.apply(b);
                let mut col = SparseVec::new();
                if y.is_zero() {
                    return col;
                }
                let (ech, offset) = indexed
                    .get(&w.add(&root))
                    .expect("submodule is closed under the action");
                assert!(ech.contains(&y), "submodule is closed under the action");
                for (k, (p, _)) in ech.canonical_rows().enumerate() {
                    let c = y.get(p);
                    if !c.is_zero() {
                        col.add_at(offset + k, &c);
                    }
                }
                col
            })
            .collect();
        ops.insert((i, j), SparseMatrix { nrows: dim, cols });
    }
    Submodule {
        module: WeightModule::from_parts(m.n(), weights, ops),
        embedding,
        spaces: indexed,
        ambient_weights: m.weights().to_vec(),
    }
}

/// `U v`, the submodule generated by a single vector; `v = 0` gives the zero module.
pub fn cyclic_submodule(m: &WeightModule, v: &SparseVec, mode: Closure) -> Result<Submodule> {
    generated_submodule(m, std::slice::from_ref(v), mode)
}

/// A linear map between modules, as a `target.dim x source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub matrix: SparseMatrix,
}

impl ModuleMap {
    pub fn source_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.nrows
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim()
    }

    pub fn is_weight_preserving(&self, source: &WeightModule, target: &WeightModule) -> bool {
        self.matrix.cols.iter().enumerate().all(|(c, col)| {
            col.indices().all(|r| target.weight(r) == source.weight(c))
        })
    }

    /// Commutes with every raising operator stored in both modules.
    pub fn is_equivariant(&self, source: &WeightModule, target: &WeightModule) -> bool {
        raising_pairs(source.n()).all(|(i, j)| match (source.op(i, j), target.op(i, j)) {
            (Some(es), Some(et)) => et.compose(&self.matrix) == self.matrix.compose(es),
            _ => true,
        })
    }
}

/// Variables `X[r][c]` of a weight-preserving map, indexed per matching weight pair.
fn hom_variables(m: &WeightModule, n: &WeightModule) -> HashMap<(usize, usize), usize> {
    let target_spaces = n.weight_spaces();
    let mut vars = HashMap::new();
    for (c, w) in m.weights().iter().enumerate() {
        if let Some(rows) = target_spaces.get(w) {
            for &r in rows {
                let k = vars.len();
                vars.insert((r, c), k);
            }
        }
    }
    vars
}

fn hom_equations(
    m: &WeightModule,
    n: &WeightModule,
    vars: &HashMap<(usize, usize), usize>,
) -> Vec<SparseVec> {
    let target_spaces = n.weight_spaces();
    let mut eqs = Vec::new();
    for i in 1..m.n() {
        let (em, en) = (m.op(i, i + 1).expect("raising"), n.op(i, i + 1).expect("raising"));
        let en_rows = en.transpose();
        let root = Weight::root(m.n(), i, i + 1);
        for (c, mu) in m.weights().iter().enumerate() {
            let Some(rows) = target_spaces.get(&mu.add(&root)) else {
                continue;
            };
            for &r in rows {
                // (E_N X - X E_M)[r][c] = 0
                let mut eq = SparseVec::new();
                for (s, x) in en_rows.cols[r].iter() {
                    if let Some(&k) = vars.get(&(s, c)) {
                        eq.add_at(k, x);
                    }
                }
                for (t, y) in em.cols[c].iter() {
                    if let Some(&k) = vars.get(&(r, t)) {
                        eq.add_at(k, &-y);
                    }
                }
                if !eq.is_zero() {
                    eqs.push(eq);
                }
            }
        }
    }
    eqs
}

/// Basis of `Hom_b(M, N)`: weight-preserving maps commuting with the simple raising operators.
pub fn hom_space(m: &WeightModule, n: &WeightModule) -> Result<Vec<ModuleMap>> {
    if m.n() != n.n() {
        return Err(KpError::RankMismatch(m.n(), n.n()));
    }
    let vars = hom_variables(m, n);
    let eqs = hom_equations(m, n, &vars);
    let mut by_index = vec![(0, 0); vars.len()];
    for (&rc, &k) in &vars {
        by_index[k] = rc;
    }
    let maps: Vec<ModuleMap> = nullspace(&eqs, vars.len())
        .into_iter()
        .map(|x| {
            let mut mat = SparseMatrix::zero(n.dim(), m.dim());
            for (k, c) in x.iter() {
                let (r, col) = by_index[k];
                mat.cols[col].add_at(r, c);
            }
            ModuleMap { matrix: mat }
        })
        .collect();
    for f in &maps {
        assert!(f.is_equivariant(m, n), "simple-root equivariance implies full equivariance");
    }
    Ok(maps)
}

/// `dim Hom_b(M, N)`.
pub fn hom_dim(m: &WeightModule, n: &WeightModule) -> Result<usize> {
    if m.n() != n.n() {
        return Err(KpError::RankMismatch(m.n(), n.n()));
    }
    let vars = hom_variables(m, n);
    let eqs = hom_equations(m, n, &vars);
    Ok(vars.len() - Echelon::from_vectors(&eqs).rank())
}

/// A quotient `M / N` with the projection `M -> M / N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub module: WeightModule,
    pub projection: ModuleMap,
}

/// Quotient of `M` by the span of `sub`, which must be a `b`-submodule.
///
/// The quotient basis is the images of the ambient basis vectors that are not
/// pivots of the reduced echelon basis of the submodule.
pub fn quotient_by(m: &WeightModule, sub: &[SparseVec]) -> Quotient {
    let ech = Echelon::from_vectors(sub);
    let pivots: std::collections::BTreeSet<usize> = ech.pivots().collect();
    let kept: Vec<usize> = (0..m.dim()).filter(|i| !pivots.contains(i)).collect();
    let index: HashMap<usize, usize> = kept.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let project = |v: &SparseVec| -> SparseVec {
        let rem = ech.reduce(v);
        SparseVec::from_pairs(rem.iter().map(|(i, c)| (index[&i], c.clone())))
    };
    let dim = kept.len();
    let weights = kept.iter().map(|&i| m.weight(i).clone()).collect();
    let mut ops = BTreeMap::new();
    for ((i, j), e) in m.ops() {
        if i > j {
            continue;
        }
        let cols = kept.iter().map(|&c| project(&e.cols[c])).collect();
        ops.insert((i, j), SparseMatrix { nrows: dim, cols });
    }
    let projection = SparseMatrix {
        nrows: dim,
        cols: (0..m.dim()).map(|c| project(&SparseVec::unit(c))).collect(),
    };
    Quotient {
        module: WeightModule::from_parts(m.n(), weights, ops),
        projection: ModuleMap { matrix: projection },
    }
}

/// Largest quotient of `M` whose weights all lie in `allowed`: the quotient by
/// the submodule generated by every weight space outside `allowed`.
pub fn largest_quotient(m: &WeightModule, allowed: &[Weight]) -> Result<Quotient> {
    let gens: Vec<SparseVec> = (0..m.dim())
        .filter(|&i| !allowed.contains(m.weight(i)))
        .map(SparseVec::unit)
        .collect();
    let sub = generated_submodule(m, &gens, Closure::Simple)?;
    Ok(quotient_by(m, &sub.embedding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmod::{exterior_power, one_dim, tensor_product, vector_rep};

    fn wt(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn cyclic_in_vector_rep() {
        let v = vector_rep(3);
        let s = cyclic_submodule(&v, &SparseVec::unit(1), Closure::Simple).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.module.character().to_string(), "x1 + x2");
        let top = cyclic_submodule(&v, &SparseVec::unit(0), Closure::Simple).unwrap();
        assert_eq!(top.dim(), 1);
        let zero = cyclic_submodule(&v, &SparseVec::new(), Closure::Simple).unwrap();
        assert_eq!(zero.dim(), 0);
        assert!(zero.module.character().is_zero());
    }

    #[test]
    fn symmetric_square_inside_tensor_square() {
        let v = vector_rep(2);
        let t = tensor_product(&v, &v).unwrap();
        // u_2 (x) u_2
        let s = cyclic_submodule(&t, &SparseVec::unit(3), Closure::Simple).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.module.check_brackets() && s.module.check_weights());
        assert!(s.inclusion().is_equivariant(&s.module, &t));
        assert!(s.contains(&SparseVec::unit(0)));
        assert!(!s.contains(&SparseVec::unit(1)));
    }

    #[test]
    fn rejects_out_of_range_vector() {
        let v = vector_rep(2);
        assert!(cyclic_submodule(&v, &SparseVec::unit(5), Closure::Simple).is_err());
    }

    #[test]
    fn hom_between_one_dimensionals() {
        let a = one_dim(&wt(&[1, 0]));
        let b = one_dim(&wt(&[0, 1]));
        assert_eq!(hom_dim(&a, &a).unwrap(), 1);
        assert_eq!(hom_dim(&a, &b).unwrap(), 0);
        assert_eq!(hom_space(&a, &a).unwrap().len(), 1);
    }

    #[test]
    fn hom_from_vector_rep() {
        let v = vector_rep(3);
        assert_eq!(hom_dim(&v, &v).unwrap(), 1);
        let basis = hom_space(&v, &v).unwrap();
        assert_eq!(basis[0].matrix, SparseMatrix::identity(3));
        // K^3 -> K_{e_1}: u_1 has weight e_1, but e_12 u_2 = u_1 must map to 0
        assert_eq!(hom_dim(&v, &one_dim(&wt(&[1, 0, 0]))).unwrap(), 0);
        // the top of K^3 is not a quotient, but the bottom weight is
        assert_eq!(hom_dim(&one_dim(&wt(&[1, 0, 0])), &v).unwrap(), 1);
    }

    #[test]
    fn largest_quotient_keeps_exterior_square() {
        let v = vector_rep(2);
        let t = tensor_product(&v, &v).unwrap();
        let q = largest_quotient(&t, &[wt(&[1, 1])]).unwrap();
        assert_eq!(q.module.dim(), 1);
        assert!(q.projection.is_surjective());
        assert!(q.projection.is_equivariant(&t, &q.module));
        let l2 = exterior_power(&v, 2).unwrap();
        assert_eq!(hom_dim(&t, &l2).unwrap(), hom_dim(&q.module, &l2).unwrap());
        let all = largest_quotient(&t, &t.distinct_weights()).unwrap();
        assert_eq!(all.module.dim(), t.dim());
    }

    #[test]
    fn quotient_actions_are_consistent() {
        let v = vector_rep(3);
        let t = tensor_product(&v, &v).unwrap();
        let s = cyclic_submodule(&t, &SparseVec::unit(8), Closure::Simple).unwrap();
        let q = quotient_by(&t, &s.embedding);
        assert_eq!(q.module.dim(), 3);
        assert!(q.module.check_brackets() && q.module.check_weights());
        assert!(q.projection.is_equivariant(&t, &q.module));
    }
}
