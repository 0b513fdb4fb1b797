//! Concrete realizations of finite reflection groups.
//!
//! Crystallographic types and H3 get a matrix model: exact root coordinates
//! and the reflections in the simple roots. A_n lives in R^{n+1}, so every
//! flat contains the diagonal and ranks are measured as codimension.
//! Dihedral types `I2(m)` use an index model on the `m` mirror lines.
//! Group elements are stored as signed permutations of the roots.

mod group;
mod model;

pub use group::{generate_group, Group, SignedPerm};
pub use model::{DihedralModel, MatrixModel, ModelExport, ModelKind, ReflectionModel, DEFAULT_ELEMENT_CAP};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{parse_types, TypeLabel};
    use crate::field::{FieldScalar, Matrix, Subspace};

    fn model(spec: &str) -> ReflectionModel {
        ReflectionModel::build(&parse_types(spec).unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&x| FieldScalar::from_int(x)).collect()
    }

    #[test]
    fn a2_roots_and_generators() {
        let m = model("A2");
        let mm = m.as_matrix().unwrap();
        assert_eq!(mm.roots, vec![ints(&[1, -1, 0]), ints(&[1, 0, -1]), ints(&[0, 1, -1])]);
        assert_eq!(mm.generators.len(), 2);
        let swap12 = Matrix::from_rows(vec![ints(&[0, 1, 0]), ints(&[1, 0, 0]), ints(&[0, 0, 1])]).unwrap();
        assert_eq!(mm.generators[0], swap12);
    }

    #[test]
    fn b2_roots() {
        let m = model("B2");
        assert_eq!(
            m.as_matrix().unwrap().roots,
            vec![ints(&[1, -1]), ints(&[1, 1]), ints(&[1, 0]), ints(&[0, 1])]
        );
    }

    #[test]
    fn root_counts_match_reflection_counts() {
        for spec in ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "D4", "D5", "F4", "H3", "E6", "I2(5)", "I2(12)"] {
            let types = parse_types(spec).unwrap();
            let m = ReflectionModel::build(&types).unwrap();
            assert_eq!(m.root_count(), types[0].reflection_count(), "{spec}");
        }
    }

    #[test]
    fn group_orders() {
        for spec in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4", "I2(5)", "I2(8)", "A1xA1", "B2xA1", "A2xI2(5)"] {
            let types = parse_types(spec).unwrap();
            let expect: u128 = types.iter().map(TypeLabel::group_order).product();
            let g = generate_group(&ReflectionModel::build(&types).unwrap(), DEFAULT_ELEMENT_CAP).unwrap();
            assert_eq!(g.order() as u128, expect, "{spec}");
            assert!(g.elements[0].is_identity());
        }
    }

    #[test]
    fn h3_roots_are_closed() {
        let m = model("H3");
        let mm = m.as_matrix().unwrap();
        assert_eq!(mm.roots.len(), 15);
        let index = mm.root_index();
        for g in &mm.generators {
            assert!(mm.permutation_of(g, &index).is_ok());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let m = model("B4");
        assert!(matches!(generate_group(&m, 100), Err(crate::Error::GroupTooLarge { cap: 100 })));
    }

    #[test]
    fn unsupported_types() {
        for spec in ["H4", "E7", "E8", "A7", "B6", "D6", "I2(31)", "E8xA1"] {
            let err = ReflectionModel::build(&parse_types(spec).unwrap()).unwrap_err();
            assert!(matches!(err, crate::Error::UnsupportedBruteForce { .. }), "{spec}");
            assert!(err.to_string().contains("recursion"), "{spec}");
        }
    }

    #[test]
    fn hyperplane_counts() {
        assert_eq!(model("A2").reflecting_hyperplanes().unwrap().len(), 3);
        assert_eq!(model("B3").reflecting_hyperplanes().unwrap().len(), 9);
        let h3 = model("H3").reflecting_hyperplanes().unwrap();
        let distinct: std::collections::HashSet<_> = h3.iter().collect();
        assert_eq!(distinct.len(), 15);
    }

    #[test]
    fn fixed_spaces() {
        let m = model("A2");
        let g = generate_group(&m, DEFAULT_ELEMENT_CAP).unwrap();
        let mm = m.as_matrix().unwrap();
        let full = m.fixed_space(&g.elements[0]).unwrap();
        assert_eq!(full.codim(), 0);
        // simple reflection fixes its hyperplane
        let s1 = &g.elements[g.generators[0]];
        assert_eq!(m.fixed_space(s1).unwrap(), mm.hyperplane(0));
        // a 3-cycle fixes only the diagonal
        let c = s1.then(&g.elements[g.generators[1]]);
        let diag = Subspace::span(mm.field, vec![ints(&[1, 1, 1])], 3).unwrap();
        assert_eq!(m.fixed_space(&c).unwrap(), diag);
    }

    #[test]
    fn permutations_determine_matrices() {
        for spec in ["A3", "B3", "H3", "D4", "A1xA2"] {
            let m = model(spec);
            let mm = m.as_matrix().unwrap();
            let g = generate_group(&m, DEFAULT_ELEMENT_CAP).unwrap();
            let index = mm.root_index();
            for (k, e) in g.elements.iter().enumerate().step_by(7) {
                let mat = mm.matrix_of(e);
                assert_eq!(&mm.permutation_of(&mat, &index).unwrap(), e, "{spec} element {k}");
                // composition of perms matches the matrix product
                let f = &g.elements[(k * 13 + 5) % g.order()];
                let prod = mm.matrix_of(f).mul(&mat).unwrap();
                assert_eq!(mm.matrix_of(&e.then(f)), prod, "{spec}");
            }
        }
    }

    #[test]
    fn generator_fixed_spaces_are_hyperplanes() {
        for spec in ["A3", "B3", "D4", "F4", "H3"] {
            let m = model(spec);
            let mm = m.as_matrix().unwrap();
            let g = generate_group(&m, DEFAULT_ELEMENT_CAP).unwrap();
            for &s in &g.generators {
                let fix = m.fixed_space(&g.elements[s]).unwrap();
                assert_eq!(fix.codim(), 1, "{spec}");
                assert!(mm.fixed_space_of_group().is_subspace_of(&fix));
            }
        }
    }

    #[test]
    fn a_reflections_are_transpositions() {
        // codim-1 fixed spaces of A3 correspond to pairs {i, j}
        let m = model("A3");
        let g = generate_group(&m, DEFAULT_ELEMENT_CAP).unwrap();
        let mut hyperplanes = std::collections::HashSet::new();
        for e in &g.elements {
            let fix = m.fixed_space(e).unwrap();
            if fix.codim() == 1 {
                hyperplanes.insert(fix);
            }
        }
        assert_eq!(hyperplanes.len(), 6);
        let expected: std::collections::HashSet<_> = m.reflecting_hyperplanes().unwrap().into_iter().collect();
        assert_eq!(hyperplanes, expected);
    }

    #[test]
    fn dihedral_action() {
        let d = DihedralModel { m: 5 };
        // rotation by 2pi/5 moves line j to j + 2
        let r = d.rotation(1);
        assert_eq!(r.hyperplane_image(0), 2);
        assert_eq!(r.hyperplane_image(4), 1);
        let s = d.reflection(0);
        assert!(s.then(&s).is_identity());
        assert_eq!(d.reflection(0).then(&d.reflection(1)), d.rotation(1));
    }

    #[test]
    fn export_shape() {
        let e = model("B2").export(None);
        assert_eq!(e.kind, "matrix");
        assert_eq!(e.roots[0], vec!["1", "-1"]);
        let json = serde_json::to_value(&e).unwrap();
        assert_eq!(json["root_count"], 4);
        let h = model("H3").export(None);
        assert!(h.roots.iter().flatten().any(|s| s.contains('√')));
    }
}
