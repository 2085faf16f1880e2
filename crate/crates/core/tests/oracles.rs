//! Small worked examples with values computed by hand.

use symspace_core::catalog::{build, stabilizer_embed, verify_entry, Params, VerifyOptions};
use symspace_core::charts::{angular_operator, grassmannian_dim, Chart};
use symspace_core::forms::FormKind;
use symspace_core::involutions::groups::{centralizer_identities_check, GroupData, GroupDescriptor, GroupName};
use symspace_core::involutions::{detect_mu, managing_type, Linearity, Semiinvolution};
use symspace_core::spaces::{component_index, contains, Label};
use symspace_core::{Error, Form, FormType, Matrix, Ring, Scalar, SpacePoint, Subspace};

fn real(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(Ring::R, rows)
}

fn lie_dim(data: GroupData) -> usize {
    GroupDescriptor::new(vec![], data).lie_algebra_dim()
}

#[test]
fn quaternionic_line_spanned_by_j_is_spanned_by_one() {
    let v = Matrix::column_vector(Ring::H, vec![Scalar::j()]);
    let u = Subspace::canonicalize(&v);
    assert_eq!(u.basis(), &Matrix::column_vector(Ring::H, vec![Scalar::one(Ring::H)]));
}

#[test]
fn sum_and_intersection_in_r3() {
    let u = Subspace::coordinate(Ring::R, 3, &[0, 1]);
    let w = Subspace::canonicalize(&real(&[&[1], &[1], &[1]]));
    assert_eq!(u.sum(&w).unwrap(), Subspace::full(Ring::R, 3));
    assert_eq!(u.intersect(&w).unwrap().dim(), 0);
}

#[test]
fn two_by_two_solve() {
    let x = real(&[&[1, 1], &[0, 1]]).solve(&real(&[&[2], &[1]])).unwrap();
    assert_eq!(x, real(&[&[1], &[1]]));
}

#[test]
fn complexified_units() {
    let j = Matrix::scalar(1, &Scalar::j()).complexify().unwrap();
    assert_eq!(j, real(&[&[0, -1], &[1, 0]]).promote(Ring::C));
    let i = Matrix::scalar(1, &Scalar::i().promote(Ring::H)).complexify().unwrap();
    let expect = Matrix::diagonal(Ring::C, &[Scalar::i(), -&Scalar::i()]);
    assert_eq!(i, expect);
}

#[test]
fn quaternionic_hermitian_value() {
    let b = Form::new(Ring::H, FormKind::Hermitian, Matrix::identity(Ring::H, 1)).unwrap();
    let v = Matrix::column_vector(Ring::H, vec![Scalar::i().promote(Ring::H)]);
    let w = Matrix::column_vector(Ring::H, vec![Scalar::j()]);
    assert_eq!(b.evaluate(&v, &w).unwrap(), Scalar::k());
}

#[test]
fn hyperbolic_plane_has_inertia_one_one() {
    let b = Form::new(Ring::R, FormKind::Symmetric, real(&[&[0, 1], &[1, 0]])).unwrap();
    assert_eq!(b.inertia().unwrap(), (1, 1));
}

#[test]
fn isotropic_diagonal_line() {
    let b = Form::signature(Ring::C, 1, 1).unwrap();
    let u = Subspace::canonicalize(&real(&[&[1], &[1]]).promote(Ring::C));
    assert!(b.is_isotropic(&u));
}

#[test]
fn split_and_non_split_forms() {
    let skew = Form::hyperbolic(Ring::R, FormKind::Skew, 2).unwrap();
    let (e, f) = skew.split_basis().unwrap();
    assert!(skew.pair_gram(&e, &e).is_zero() && skew.pair_gram(&f, &f).is_zero());
    assert_eq!(Form::signature(Ring::C, 2, 1).unwrap().split_basis(), Err(Error::NotSplit));
    let sym3 = Form::new(Ring::C, FormKind::Symmetric, Matrix::identity(Ring::C, 3)).unwrap();
    assert_eq!(sym3.split_basis(), Err(Error::NotSplit));
}

#[test]
fn congruences() {
    let a = Form::hyperbolic(Ring::R, FormKind::Skew, 2).unwrap();
    let g = real(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 2], &[0, 0, -2, 0]]);
    let b = Form::new(Ring::R, FormKind::Skew, g).unwrap();
    assert!(a.congruent(&b).unwrap());
    let j = Scalar::j();
    let plus = Form::new(Ring::H, FormKind::Antihermitian, Matrix::diagonal(Ring::H, &[j.clone(), j.clone()])).unwrap();
    let minus = Form::new(Ring::H, FormKind::Antihermitian, Matrix::diagonal(Ring::H, &[-&j, -&j])).unwrap();
    assert!(plus.congruent(&minus).unwrap());
    // right multiplication by i on each coordinate carries one to the other
    let t = Matrix::scalar(2, &Scalar::i().promote(Ring::H));
    assert_eq!(plus.pullback_gram(&t), *minus.gram());
}

#[test]
fn mu_of_entries_3_and_15() {
    for (id, mu) in [(3, -1), (15, 1)] {
        let e = build(id, Params::n(1)).unwrap();
        assert_eq!(detect_mu(e.form_b.as_ref().unwrap(), e.semiinv.as_ref().unwrap()).unwrap(), mu);
    }
}

#[test]
fn managing_form_types() {
    let sym = FormType::new(Ring::R, FormKind::Symmetric).unwrap();
    let d = managing_type(sym, Linearity::Linear, 1, -1).unwrap();
    assert_eq!(d.kind, FormKind::Skew);

    let e8 = build(8, Params::pq(1, 1)).unwrap();
    assert_eq!(e8.managing.as_ref().unwrap().kind(), FormKind::Symmetric);
    assert_eq!(GroupName::of_form(e8.managing.as_ref().unwrap()), GroupName::O(2, 2));
    let e13 = build(13, Params::n(1)).unwrap();
    let d13 = e13.managing.as_ref().unwrap();
    assert_eq!((d13.ring(), d13.kind()), (Ring::C, FormKind::Symmetric));
    assert_eq!(GroupName::of_form(d13), GroupName::OC(2));
}

#[test]
fn diagonal_scaling_preserves_the_hyperbolic_plane() {
    let b = Form::new(Ring::R, FormKind::Symmetric, real(&[&[0, 1], &[1, 0]])).unwrap();
    let g = Matrix::diagonal(Ring::R, &[Scalar::from_i64(Ring::R, 2), Scalar::from_ratio(Ring::R, 1, 2)]);
    assert!(b.is_preserved_by(&g));
}

#[test]
fn non_commuting_matrix_fails_all_three_descriptions() {
    let e = build(3, Params::n(1)).unwrap();
    let (b, j, d) = (e.form_b.as_ref().unwrap(), e.semiinv.as_ref().unwrap(), e.managing.as_ref().unwrap());
    let g = Matrix::diagonal(Ring::R, &[Scalar::from_i64(Ring::R, 1), Scalar::from_i64(Ring::R, 2)]);
    assert!(!j.commutes_with(&g));
    let report = centralizer_identities_check(b, j, d, &[g]);
    assert!(report.passed());
    assert_eq!(report.members, 0);
}

#[test]
fn small_lie_algebra_dimensions() {
    assert_eq!(lie_dim(GroupData::Form(Form::signature(Ring::R, 3, 0).unwrap())), 3);
    assert_eq!(lie_dim(GroupData::Form(Form::hyperbolic(Ring::R, FormKind::Skew, 1).unwrap())), 3);
    assert_eq!(lie_dim(GroupData::Form(Form::signature(Ring::C, 1, 1).unwrap())), 4);
}

#[test]
fn built_entries() {
    let e8 = build(8, Params::pq(1, 1)).unwrap();
    assert_eq!((e8.ring, e8.dim), (Ring::R, 4));
    assert_eq!(e8.form_b.as_ref().unwrap().kind(), FormKind::Skew);
    assert_eq!((e8.semiinv.as_ref().unwrap().epsilon(), e8.listed_mu), (-1, Some(1)));
    assert_eq!(e8.ud.as_ref().unwrap().name(), "O(2, 2)");

    let e32 = build(32, Params::n(2)).unwrap();
    assert_eq!(e32.title(), "Sp(4, R)/GL(2, R)");
    assert!(e32.form_b.is_some() && e32.semiinv.is_none());

    let e54 = build(54, Params::pq(1, 1)).unwrap();
    assert_eq!(e54.title(), "GL(2, H)/GL(1, H) × GL(1, H)");
    assert!(e54.form_b.is_none() && e54.semiinv.is_none());
}

#[test]
fn verified_entries() {
    let opts = VerifyOptions { trials: 5, identity_samples: 20, seed: 1 };
    let e11 = build(11, Params::pq(1, 1)).unwrap();
    assert_eq!(e11.ud.as_ref().unwrap().name(), "U(2, 2)");
    assert!(verify_entry(&e11, &opts).passed());
    let e38 = build(38, Params::n(1)).unwrap();
    assert_eq!(e38.g.name(), "GL(1, R) × GL(1, R)");
    assert!(verify_entry(&e38, &opts).passed());
}

#[test]
fn stabilizer_of_entry_13_at_n_1() {
    let e = build(13, Params::n(1)).unwrap();
    let base = SpacePoint::base(&e);
    for sign in [1, -1] {
        let g = stabilizer_embed(&e, &Matrix::scalar(1, &Scalar::from_i64(Ring::C, sign))).unwrap();
        assert!(e.g.contains(&g));
        assert_eq!(base.image(&g), base);
    }
}

#[test]
fn swapped_list_1_point_is_a_member() {
    let e = build(8, Params::pq(1, 1)).unwrap();
    let swapped = SpacePoint::new(e.base.1.clone(), e.base.0.clone());
    assert!(contains(&e, &swapped).unwrap());
}

#[test]
fn component_labels_of_small_points() {
    let e = build(45, Params::pqrs(1, 1, 1, 0)).unwrap();
    let q1 = Subspace::coordinate(Ring::R, 2, &[0]);
    let q2 = e.managing.as_ref().unwrap().orthogonal_complement(&q1);
    assert_eq!(component_index(&e, &SpacePoint::new(q1, q2)).unwrap(), Label(1, 0));
    let e3 = build(3, Params::n(2)).unwrap();
    assert_eq!(component_index(&e3, &SpacePoint::base(&e3)).unwrap(), Label(2, 0));
}

#[test]
fn angular_operator_of_a_line() {
    let x = Subspace::coordinate(Ring::R, 2, &[0]);
    let y = Subspace::coordinate(Ring::R, 2, &[1]);
    let r = Subspace::canonicalize(&real(&[&[1], &[5]]));
    assert_eq!(angular_operator(&r, &x, &y).unwrap(), real(&[&[5]]));
}

#[test]
fn fractional_linear_action_on_coordinates() {
    let e = build(52, Params::pq(1, 1)).unwrap();
    let chart = Chart::base(&e);
    let c = symspace_core::charts::AngularCoords { m: real(&[&[3]]), n: real(&[&[0]]) };
    // block-diagonal g: M ↦ D·M·A⁻¹
    let g = real(&[&[2, 0], &[0, 5]]);
    assert_eq!(chart.act_on_coords(&g, &c).unwrap().m, Matrix::from_rows(Ring::R, vec![vec![Scalar::from_ratio(Ring::R, 15, 2)]]));
    // unipotent g: M ↦ C + M
    let u = real(&[&[1, 0], &[4, 1]]);
    assert_eq!(chart.act_on_coords(&u, &c).unwrap().m, real(&[&[7]]));
}

#[test]
fn space_dimensions() {
    assert_eq!(grassmannian_dim(&build(52, Params::pq(1, 1)).unwrap()), 2);
    assert_eq!(grassmannian_dim(&build(32, Params::n(2)).unwrap()), 6);
    assert_eq!(grassmannian_dim(&build(13, Params::n(1)).unwrap()), 2);
    let e32 = build(32, Params::n(2)).unwrap();
    assert_eq!((e32.g.lie_algebra_dim(), e32.h.lie_algebra_dim()), (10, 4));
}

#[test]
fn exchange_semiinvolution_squares_to_epsilon() {
    let j = Semiinvolution::exchange(Ring::R, Linearity::Linear, -1, 2).unwrap();
    let m = j.matrix();
    assert_eq!(&(m * m), &Matrix::identity(Ring::R, 4).scale_right(&Scalar::from_i64(Ring::R, -1)));
}
