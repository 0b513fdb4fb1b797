use std::collections::HashMap;

use serde::Serialize;

use crate::coxeter::{spec_of_types, Family, TypeLabel};
use crate::error::{Error, Result};
use crate::field::{dot, Field, FieldScalar, Matrix, Subspace};

use super::group::SignedPerm;

/// Default limit on the number of group elements produced by closure.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Roots, generator matrices and ambient space of a matrix realization.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub field: Field,
    pub ambient: usize,
    /// One representative per pair `±alpha`.
    pub roots: Vec<Vec<FieldScalar>>,
    /// Reflections in the simple roots, in standard vertex order.
    pub generators: Vec<Matrix>,
    /// `[B F]^{-1}` for a root basis `B` of the root span and a basis `F` of its complement.
    reconstruction: Reconstruction,
}

#[derive(Clone, Debug)]
struct Reconstruction {
    root_basis: Vec<usize>,
    complement: Vec<Vec<FieldScalar>>,
    inverse: Matrix,
}

/// Lines `L_0 .. L_{m-1}` at angles `k*pi/m`; the action is index arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DihedralModel {
    pub m: u32,
}

#[derive(Clone, Debug)]
pub enum ModelKind {
    Matrix(MatrixModel),
    Dihedral(DihedralModel),
    /// Product with at least one dihedral factor; roots of factor `k` follow those of factor `k - 1`.
    Product(Vec<ReflectionModel>),
}

/// A concrete realization of a finite reflection group.
#[derive(Clone, Debug)]
pub struct ReflectionModel {
    pub types: Vec<TypeLabel>,
    pub kind: ModelKind,
}

fn unit(n: usize, i: usize) -> Vec<FieldScalar> {
    let mut v = vec![FieldScalar::zero(); n];
    v[i] = FieldScalar::one();
    v
}

fn combo(n: usize, terms: &[(usize, i64)]) -> Vec<FieldScalar> {
    let mut v = vec![FieldScalar::zero(); n];
    for &(i, c) in terms {
        v[i] = &v[i] + &FieldScalar::from_int(c);
    }
    v
}

fn scaled(v: &[FieldScalar], c: &FieldScalar) -> Vec<FieldScalar> {
    v.iter().map(|x| x * c).collect()
}

/// The representative of `±v` whose first nonzero coordinate is positive.
fn positive_rep(v: Vec<FieldScalar>) -> Vec<FieldScalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.signum() < 0 => v.iter().map(|y| -y).collect(),
        _ => v,
    }
}

/// Reflection matrix `I - 2 a a^T / (a, a)`.
fn reflection_matrix(alpha: &[FieldScalar]) -> Matrix {
    let n = alpha.len();
    let norm = dot(alpha, alpha);
    let c = &FieldScalar::from_int(2) / &norm;
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j) - &(&c * &(&alpha[i] * &alpha[j]));
            m.set(i, j, v);
        }
    }
    m
}

/// All positive roots reachable from the simple roots under the simple reflections.
fn root_closure(simple: &[Vec<FieldScalar>]) -> Vec<Vec<FieldScalar>> {
    let gens: Vec<Matrix> = simple.iter().map(|a| reflection_matrix(a)).collect();
    let mut roots: Vec<Vec<FieldScalar>> = Vec::new();
    let mut seen = HashMap::new();
    for a in simple {
        let r = positive_rep(a.clone());
        if seen.insert(r.clone(), roots.len()).is_none() {
            roots.push(r);
        }
    }
    let mut i = 0;
    while i < roots.len() {
        for g in &gens {
            let img = positive_rep(g.apply(&roots[i]));
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), roots.len());
                roots.push(img);
            }
        }
        i += 1;
    }
    roots
}

/// Simple roots and (optionally) a hand-ordered root list for one irreducible type.
fn irreducible_data(t: TypeLabel) -> Result<(usize, Vec<Vec<FieldScalar>>, Option<Vec<Vec<FieldScalar>>>)> {
    let n = t.rank as usize;
    let unsupported = |reason: &str| Error::UnsupportedBruteForce { group: t.to_string(), reason: reason.into() };
    match t.family {
        Family::A => {
            if n > 6 {
                return Err(unsupported("brute force covers A_n for n <= 6"));
            }
            let dim = n + 1;
            let simple = (0..n).map(|i| combo(dim, &[(i, 1), (i + 1, -1)])).collect();
            let mut roots = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    roots.push(combo(dim, &[(i, 1), (j, -1)]));
                }
            }
            Ok((dim, simple, Some(roots)))
        }
        Family::B => {
            if n > 5 {
                return Err(unsupported("brute force covers B_n for n <= 5"));
            }
            let mut simple: Vec<_> = (0..n - 1).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
            simple.push(unit(n, n - 1));
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(combo(n, &[(i, 1), (j, -1)]));
                    roots.push(combo(n, &[(i, 1), (j, 1)]));
                }
            }
            roots.extend((0..n).map(|i| unit(n, i)));
            Ok((n, simple, Some(roots)))
        }
        Family::D => {
            if n > 5 {
                return Err(unsupported("brute force covers D_n for n <= 5"));
            }
            let mut simple: Vec<_> = (0..n - 1).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
            simple.push(combo(n, &[(n - 2, 1), (n - 1, 1)]));
            let mut roots = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(combo(n, &[(i, 1), (j, -1)]));
                    roots.push(combo(n, &[(i, 1), (j, 1)]));
                }
            }
            Ok((n, simple, Some(roots)))
        }
        Family::F => {
            let half = FieldScalar::from_ratio(1, 2);
            let simple = vec![
                combo(4, &[(1, 1), (2, -1)]),
                combo(4, &[(2, 1), (3, -1)]),
                unit(4, 3),
                scaled(&combo(4, &[(0, 1), (1, -1), (2, -1), (3, -1)]), &half),
            ];
            Ok((4, simple, None))
        }
        Family::H if n == 3 => {
            // Gram matrix 4 * [[1, -tau/2, 0], [-tau/2, 1, -1/2], [0, -1/2, 1]]
            let tau = FieldScalar::golden();
            let simple = vec![
                combo(3, &[(0, 2)]),
                vec![-&tau, FieldScalar::one(), &tau - &FieldScalar::one()],
                combo(3, &[(1, -2)]),
            ];
            Ok((3, simple, None))
        }
        Family::E if n == 6 => {
            // Bourbaki coordinates inside R^8
            let half = FieldScalar::from_ratio(1, 2);
            let a1 = scaled(&combo(8, &[(0, 1), (7, 1), (1, -1), (2, -1), (3, -1), (4, -1), (5, -1), (6, -1)]), &half);
            let simple = vec![
                a1,
                combo(8, &[(0, 1), (1, 1)]),
                combo(8, &[(1, 1), (0, -1)]),
                combo(8, &[(2, 1), (1, -1)]),
                combo(8, &[(3, 1), (2, -1)]),
                combo(8, &[(4, 1), (3, -1)]),
            ];
            Ok((8, simple, None))
        }
        Family::I2 => unreachable!("dihedral types use the index model"),
        _ => Err(unsupported("group too large for brute force (H4, E7, E8 are covered by the recursion)")),
    }
}

impl MatrixModel {
    fn from_simple(
        ambient: usize,
        simple: Vec<Vec<FieldScalar>>,
        roots: Option<Vec<Vec<FieldScalar>>>,
    ) -> Result<Self> {
        let field = simple.iter().flatten().map(FieldScalar::field).fold(Field::Rational, Field::join);
        let roots = roots.unwrap_or_else(|| root_closure(&simple));
        let generators = simple.iter().map(|a| reflection_matrix(a)).collect();
        Self::assemble(field, ambient, roots, generators)
    }

    fn assemble(field: Field, ambient: usize, roots: Vec<Vec<FieldScalar>>, generators: Vec<Matrix>) -> Result<Self> {
        // a maximal independent subset of the roots, chosen greedily
        let mut root_basis = Vec::new();
        let mut span = Subspace::zero(field, ambient);
        for (i, r) in roots.iter().enumerate() {
            if !span.contains_vector(r) {
                span = span.join(&Subspace::span(field, vec![r.clone()], ambient)?)?;
                root_basis.push(i);
            }
        }
        let complement = span.annihilator().basis().to_vec();
        let mut cols: Vec<Vec<FieldScalar>> = root_basis.iter().map(|&i| roots[i].clone()).collect();
        cols.extend(complement.iter().cloned());
        let inverse = Matrix::from_columns(&cols)?.inverse()?;
        Ok(Self { field, ambient, roots, generators, reconstruction: Reconstruction { root_basis, complement, inverse } })
    }

    /// Block direct sum.
    fn direct_sum(parts: &[MatrixModel]) -> Result<Self> {
        let ambient: usize = parts.iter().map(|p| p.ambient).sum();
        let field = parts.iter().map(|p| p.field).fold(Field::Rational, Field::join);
        let mut roots = Vec::new();
        let mut generators = Vec::new();
        let mut offset = 0;
        for p in parts {
            for r in &p.roots {
                let mut v = vec![FieldScalar::zero(); ambient];
                v[offset..offset + p.ambient].clone_from_slice(r);
                roots.push(v);
            }
            for g in &p.generators {
                let mut m = Matrix::identity(ambient);
                for i in 0..p.ambient {
                    for j in 0..p.ambient {
                        m.set(offset + i, offset + j, g.get(i, j).clone());
                    }
                }
                generators.push(m);
            }
            offset += p.ambient;
        }
        Self::assemble(field, ambient, roots, generators)
    }

    /// Index and sign of `±v` in the root list.
    pub fn find_root(&self, v: &[FieldScalar], index: &HashMap<Vec<FieldScalar>, usize>) -> Option<(usize, bool)> {
        if let Some(&i) = index.get(v) {
            return Some((i, false));
        }
        let neg: Vec<FieldScalar> = v.iter().map(|x| -x).collect();
        index.get(&neg).map(|&i| (i, true))
    }

    pub fn root_index(&self) -> HashMap<Vec<FieldScalar>, usize> {
        self.roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect()
    }

    /// Signed permutation of the roots induced by `m`.
    pub fn permutation_of(&self, m: &Matrix, index: &HashMap<Vec<FieldScalar>, usize>) -> Result<SignedPerm> {
        self.roots
            .iter()
            .map(|r| {
                self.find_root(&m.apply(r), index)
                    .ok_or_else(|| Error::InvalidGraph("root system is not closed under a generator".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(|v| SignedPerm::from_pairs(&v))
    }

    /// Matrix of the element acting on roots by `perm`; it fixes the complement of the root span.
    pub fn matrix_of(&self, perm: &SignedPerm) -> Matrix {
        let rec = &self.reconstruction;
        let mut cols: Vec<Vec<FieldScalar>> = rec
            .root_basis
            .iter()
            .map(|&i| {
                let (j, neg) = perm.image(i);
                if neg {
                    self.roots[j].iter().map(|x| -x).collect()
                } else {
                    self.roots[j].clone()
                }
            })
            .collect();
        cols.extend(rec.complement.iter().cloned());
        Matrix::from_columns(&cols).expect("square").mul(&rec.inverse).expect("dimensions agree")
    }

    /// Subspace fixed pointwise by the whole group (the complement of the root span).
    pub fn fixed_space_of_group(&self) -> Subspace {
        Subspace::span(self.field, self.reconstruction.complement.clone(), self.ambient).expect("consistent")
    }

    pub fn hyperplane(&self, root: usize) -> Subspace {
        Subspace::orthogonal_complement_of(self.field, vec![self.roots[root].clone()], self.ambient)
            .expect("root has ambient length")
    }

    pub fn essential_rank(&self) -> usize {
        self.reconstruction.root_basis.len()
    }
}

impl DihedralModel {
    /// Index arithmetic on angles measured in units of `pi/m`, modulo `2m`.
    /// Root `j` points at angle `j`; angle `u >= m` is root `u - m` with a sign flip.
    fn signed(&self, u: i64) -> (usize, bool) {
        let m = self.m as i64;
        let u = u.rem_euclid(2 * m);
        if u >= m {
            ((u - m) as usize, true)
        } else {
            (u as usize, false)
        }
    }

    /// Reflection in the mirror perpendicular to root `a`: angle `u -> 2a + m - u`.
    pub fn reflection(&self, a: usize) -> SignedPerm {
        let m = self.m as i64;
        let pairs: Vec<_> = (0..m).map(|u| self.signed(2 * a as i64 + m - u)).collect();
        SignedPerm::from_pairs(&pairs)
    }

    /// Rotation by `2k pi / m`: angle `u -> u + 2k`.
    pub fn rotation(&self, k: usize) -> SignedPerm {
        let pairs: Vec<_> = (0..self.m as i64).map(|u| self.signed(u + 2 * k as i64)).collect();
        SignedPerm::from_pairs(&pairs)
    }
}

impl ReflectionModel {
    /// Realize a product of finite irreducible types for brute-force computation.
    ///
    /// Supported: A_n (n <= 6), B_n (n <= 5), D_n (n <= 5), F4, H3, E6, I2(m) (m <= 30),
    /// and products of these.
    pub fn build(types: &[TypeLabel]) -> Result<Self> {
        let mut types = types.to_vec();
        types.sort();
        let spec = spec_of_types(&types);
        for t in &types {
            if t.family == Family::I2 && t.rank > 30 {
                return Err(Error::UnsupportedBruteForce {
                    group: spec,
                    reason: "brute force covers I2(m) for m <= 30".into(),
                });
            }
        }
        let irreducible = |t: TypeLabel| -> Result<ReflectionModel> {
            let kind = if t.family == Family::I2 {
                ModelKind::Dihedral(DihedralModel { m: t.rank })
            } else {
                let (ambient, simple, roots) = irreducible_data(t).map_err(|e| match e {
                    Error::UnsupportedBruteForce { reason, .. } => {
                        Error::UnsupportedBruteForce { group: spec.clone(), reason }
                    }
                    other => other,
                })?;
                ModelKind::Matrix(MatrixModel::from_simple(ambient, simple, roots)?)
            };
            Ok(ReflectionModel { types: vec![t], kind })
        };
        let parts = types.iter().map(|&t| irreducible(t)).collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            return Ok(parts.into_iter().next().expect("one part"));
        }
        if parts.is_empty() {
            let m = MatrixModel::assemble(Field::Rational, 0, Vec::new(), Vec::new())?;
            return Ok(ReflectionModel { types, kind: ModelKind::Matrix(m) });
        }
        if parts.iter().all(|p| matches!(p.kind, ModelKind::Matrix(_))) {
            let mats: Vec<MatrixModel> = parts
                .into_iter()
                .map(|p| match p.kind {
                    ModelKind::Matrix(m) => m,
                    _ => unreachable!(),
                })
                .collect();
            return Ok(ReflectionModel { types, kind: ModelKind::Matrix(MatrixModel::direct_sum(&mats)?) });
        }
        Ok(ReflectionModel { types, kind: ModelKind::Product(parts) })
    }

    pub fn spec(&self) -> String {
        spec_of_types(&self.types)
    }

    pub fn root_count(&self) -> usize {
        match &self.kind {
            ModelKind::Matrix(m) => m.roots.len(),
            ModelKind::Dihedral(d) => d.m as usize,
            ModelKind::Product(parts) => parts.iter().map(ReflectionModel::root_count).sum(),
        }
    }

    pub fn essential_rank(&self) -> usize {
        match &self.kind {
            ModelKind::Matrix(m) => m.essential_rank(),
            ModelKind::Dihedral(_) => 2,
            ModelKind::Product(parts) => parts.iter().map(ReflectionModel::essential_rank).sum(),
        }
    }

    pub fn as_matrix(&self) -> Option<&MatrixModel> {
        match &self.kind {
            ModelKind::Matrix(m) => Some(m),
            _ => None,
        }
    }

    /// Generators as signed permutations of the roots.
    pub fn generator_permutations(&self) -> Result<Vec<SignedPerm>> {
        match &self.kind {
            ModelKind::Matrix(m) => {
                let index = m.root_index();
                m.generators.iter().map(|g| m.permutation_of(g, &index)).collect()
            }
            ModelKind::Dihedral(d) => Ok(vec![d.reflection(0), d.reflection(1)]),
            ModelKind::Product(parts) => {
                let total = self.root_count();
                let mut out = Vec::new();
                let mut offset = 0;
                for p in parts {
                    for g in p.generator_permutations()? {
                        out.push(g.embedded(offset, total));
                    }
                    offset += p.root_count();
                }
                Ok(out)
            }
        }
    }

    /// One hyperplane per root; only matrix models have coordinates.
    pub fn reflecting_hyperplanes(&self) -> Result<Vec<Subspace>> {
        let m = self.as_matrix().ok_or_else(|| no_coordinates(self))?;
        Ok((0..m.roots.len()).map(|i| m.hyperplane(i)).collect())
    }

    /// Kernel of `matrix(g) - I`.
    pub fn fixed_space(&self, g: &SignedPerm) -> Result<Subspace> {
        let m = self.as_matrix().ok_or_else(|| no_coordinates(self))?;
        let mat = m.matrix_of(g);
        let ns = mat.sub(&Matrix::identity(m.ambient)).nullspace();
        Subspace::span(m.field, ns, m.ambient)
    }

    /// Debug/verification export with exact coordinate strings.
    pub fn export(&self, elements: Option<&[SignedPerm]>) -> ModelExport {
        let (ambient, field, roots, generators) = match &self.kind {
            ModelKind::Matrix(m) => (
                m.ambient,
                Some(m.field),
                m.roots.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
                m.generators.iter().map(|g| g.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()).collect(),
            ),
            _ => (2 * self.types.len(), None, Vec::new(), Vec::new()),
        };
        let kind = match &self.kind {
            ModelKind::Matrix(_) => "matrix",
            ModelKind::Dihedral(_) => "dihedral",
            ModelKind::Product(_) => "product",
        };
        ModelExport {
            group: self.spec(),
            kind: kind.into(),
            ambient,
            field,
            root_count: self.root_count(),
            roots,
            generators,
            generator_permutations: self.generator_permutations().unwrap_or_default().iter().map(SignedPerm::to_signed_indices).collect(),
            elements: elements.map(|es| es.iter().map(SignedPerm::to_signed_indices).collect()),
        }
    }
}

fn no_coordinates(m: &ReflectionModel) -> Error {
    Error::UnsupportedBruteForce {
        group: m.spec(),
        reason: "the dihedral index model has no coordinates".into(),
    }
}

/// JSON shape of [`ReflectionModel::export`]. Signed root indices are 1-based,
/// negative when the image is the negated root.
#[derive(Clone, Debug, Serialize)]
pub struct ModelExport {
    pub group: String,
    pub kind: String,
    pub ambient: usize,
    pub field: Option<Field>,
    pub root_count: usize,
    pub roots: Vec<Vec<String>>,
    pub generators: Vec<Vec<Vec<String>>>,
    pub generator_permutations: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Vec<i64>>>,
}
