//! Worked examples for each operation, with hand-computed expectations.

use canrel::finite::{fcompose, ffactor, fmonic, ftrajectories, FiniteRelation};
use canrel::indexed::{
    deformation_family, icompose, igraph_compose, iinvert, indexed_reduce, iproduct, ishift, itrace,
    itranspose_reduction, lift_indexed, normal_form_hyper, sabot_leq, IndexMode, IndexedCanonicalRelation,
    IndexedLagrangian,
};
use canrel::linalg::{int, kernel, q, rref, zero_vec, Matrix, Subspace};
use canrel::path::{
    collapse, path_factorize, path_minimal, path_product, trajectory_space, ww_normalize, Path,
};
use canrel::random::random_subspace;
use canrel::relations::{
    classify_morphism, compose, congeniality, dual_morphism, factor, fixed_space_dim, graph, make_relation,
    pair_excess, projector, reduced_product, reduction_relation, transpose, ungraph, unit_counit,
    CanonicalRelation,
};
use canrel::symplectic::{
    adapted_canonical_basis, chow_distance, classify_subspace, dual_space, excess_of_reduction, form_eval,
    lagrangian_complement, product_space, reduce_lagrangian, reduction_data, standard_space, symp_complement,
    AdaptedBasis, SymplecticSpace,
};
use canrel::Error;

fn v(xs: &[i64]) -> Vec<canrel::linalg::Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::span(n, vs.iter().map(|x| v(x)).collect()).unwrap()
}

fn x1() -> SymplecticSpace {
    standard_space(1)
}

/// A relation `X ← Y` of the split form `L × M`.
fn split(x: &SymplecticSpace, l: &Subspace, y: &SymplecticSpace, m: &Subspace) -> CanonicalRelation {
    make_relation(x, y, &l.product(m)).unwrap()
}

/// `f = ⟨e⟩ × ⟨e⟩`, `g = ⟨e⟩ × ⟨e*⟩` on the plane: excess 1.
fn excess_one_pair() -> (CanonicalRelation, CanonicalRelation) {
    let (x, e, es) = (x1(), span(2, &[&[1, 0]]), span(2, &[&[0, 1]]));
    (split(&x, &e, &x, &e), split(&x, &e, &x, &es))
}

// ------------------------------------------------------------ exact_linalg

#[test]
fn rref_examples() {
    assert_eq!(rref(&Matrix::identity(2)), Matrix::identity(2));
    assert_eq!(rref(&Matrix::from_i64(&[&[2, 4], &[1, 2]])), Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    assert_eq!(rref(&Matrix::zeros(2, 3)), Matrix::zeros(2, 3));
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel(&Matrix::identity(2)), Subspace::zero(2));
    let k = kernel(&Matrix::from_i64(&[&[1, 2]]));
    assert_eq!(k, Subspace::span(2, vec![vec![int(1), q(-1, 2)]]).unwrap());
    assert_eq!(k.basis_vectors(), vec![vec![int(1), q(-1, 2)]]);
    assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
}

#[test]
fn sum_intersect_contains_examples() {
    let a = span(2, &[&[1, 0]]);
    assert_eq!(a.sum(&a).unwrap(), a);
    assert_eq!(a.sum(&span(2, &[&[0, 1]])).unwrap(), Subspace::full(2));
    let s = span(3, &[&[1, 0, 0]]).sum(&span(3, &[&[1, 1, 0]])).unwrap();
    assert_eq!(s, span(3, &[&[1, 0, 0], &[0, 1, 0]]));
    assert!(a.sum(&Subspace::full(3)).is_err());

    assert_eq!(a.intersect(&a).unwrap(), a);
    assert_eq!(a.intersect(&span(2, &[&[0, 1]])).unwrap(), Subspace::zero(2));
    let diag = span(2, &[&[1, 1]]);
    assert_eq!(Subspace::full(2).intersect(&diag).unwrap(), diag);

    assert!(a.contains(&zero_vec(2)).unwrap());
    assert!(!a.contains(&v(&[1, 1])).unwrap());
    assert!(diag.leq(&Subspace::full(2)).unwrap());
    assert!(a.contains(&v(&[1, 1, 1])).is_err());
}

#[test]
fn random_subspace_examples() {
    assert_eq!(random_subspace(4, 0, 3).unwrap(), Subspace::zero(4));
    assert_eq!(random_subspace(4, 4, 3).unwrap(), Subspace::full(4));
    let a = random_subspace(4, 2, 7).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a, random_subspace(4, 2, 7).unwrap());
    assert!(matches!(random_subspace(2, 3, 0), Err(Error::DimensionTooLarge { .. })));
}

// ------------------------------------------------------------ symplectic

#[test]
fn standard_space_examples() {
    assert!(standard_space(0).is_unit());
    assert_eq!(form_eval(&x1(), &v(&[1, 0]), &v(&[0, 1])).unwrap(), int(1));
    assert_eq!(form_eval(&x1(), &v(&[0, 1]), &v(&[1, 0])).unwrap(), int(-1));
    assert_eq!(form_eval(&x1(), &v(&[3, 5]), &v(&[3, 5])).unwrap(), int(0));
    let expected = Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
    assert_eq!(standard_space(2).form(), &expected);
}

#[test]
fn complement_and_classification_examples() {
    let x2 = standard_space(2);
    assert_eq!(symp_complement(&x2, &Subspace::full(4)).unwrap(), Subspace::zero(4));
    let e = span(2, &[&[1, 0]]);
    assert_eq!(symp_complement(&x1(), &e).unwrap(), e);
    // Basis order (e₁, e₂, e₁*, e₂*).
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    assert_eq!(symp_complement(&x2, &c).unwrap(), span(4, &[&[0, 1, 0, 0]]));

    let zero = classify_subspace(&x2, &Subspace::zero(4)).unwrap();
    assert!(zero.is_isotropic && !zero.is_coisotropic);
    assert!(classify_subspace(&x1(), &e).unwrap().is_lagrangian);
    let cc = classify_subspace(&x2, &c).unwrap();
    assert!(cc.is_coisotropic && !cc.is_isotropic && !cc.is_lagrangian);
}

#[test]
fn dual_and_product_examples() {
    let x = standard_space(2);
    assert_eq!(dual_space(&dual_space(&x)), x);
    assert_eq!(product_space(&x, &SymplecticSpace::unit()), x);
    let p = product_space(&x1(), &dual_space(&x1()));
    let w = x1().form().clone();
    assert_eq!(p.form(), &w.block_diag(&w.neg()));
}

#[test]
fn reduction_data_examples() {
    let x2 = standard_space(2);
    let whole = reduction_data(&x2, &Subspace::full(4)).unwrap();
    assert_eq!(whole.reduced.dim(), 4);
    assert!(whole.check_invariants().unwrap());
    let lag = reduction_data(&x2, &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap();
    assert!(lag.reduced.is_unit());
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    assert_eq!(rd.reduced, x1());
    assert!(rd.check_invariants().unwrap());
    assert!(matches!(reduction_data(&x2, &span(4, &[&[1, 0, 0, 0]])), Err(Error::NotCoisotropic)));
}

#[test]
fn reduce_lagrangian_examples() {
    let x2 = standard_space(2);
    let whole = reduction_data(&x2, &Subspace::full(4)).unwrap();
    let l = span(4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
    assert_eq!(reduce_lagrangian(&whole, &l).unwrap(), l);

    let rd = reduction_data(&x1(), &span(2, &[&[1, 0]])).unwrap();
    for l in [span(2, &[&[1, 0]]), span(2, &[&[0, 1]]), span(2, &[&[1, 3]])] {
        assert_eq!(reduce_lagrangian(&rd, &l).unwrap(), Subspace::zero(0));
    }

    // C = ⟨e₁, e₂, e₁*⟩, L = ⟨e₁, e₂⟩: L ∩ C⊥ = ⟨e₂⟩ is killed, so L^C is the image of e₁.
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    let l = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let lc = reduce_lagrangian(&rd, &l).unwrap();
    assert_eq!(lc, Subspace::span(2, vec![rd.project(&v(&[1, 0, 0, 0])).unwrap()]).unwrap());
    assert_eq!(rd.project(&v(&[0, 1, 0, 0])).unwrap(), zero_vec(2));
    assert!(rd.reduced.is_lagrangian(&lc).unwrap());
    assert!(matches!(reduce_lagrangian(&rd, &c), Err(Error::NotLagrangian)));
}

#[test]
fn excess_of_reduction_examples() {
    let x2 = standard_space(2);
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    // Transversal to C: contains e₂*.
    assert_eq!(excess_of_reduction(&rd, &span(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]])).unwrap(), 0);
    let e = span(2, &[&[1, 0]]);
    let rd1 = reduction_data(&x1(), &e).unwrap();
    assert_eq!(excess_of_reduction(&rd1, &e).unwrap(), 1);
    let whole = reduction_data(&x2, &Subspace::full(4)).unwrap();
    assert_eq!(excess_of_reduction(&whole, &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap(), 0);
}

#[test]
fn chow_distance_examples() {
    let (e, es) = (span(2, &[&[1, 0]]), span(2, &[&[0, 1]]));
    assert_eq!(chow_distance(&x1(), &e, &e).unwrap(), 0);
    assert_eq!(chow_distance(&x1(), &e, &es).unwrap(), 1);
    let x2 = standard_space(2);
    let a = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let b = span(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
    assert_eq!(chow_distance(&x2, &a, &b).unwrap(), 1);
    assert!(chow_distance(&x2, &a, &span(4, &[&[1, 0, 0, 0]])).is_err());
}

#[test]
fn adapted_basis_examples() {
    let x2 = standard_space(2);
    let l = span(4, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
    // L = I: only the e-block.
    let b = adapted_canonical_basis(&x2, &l, &l).unwrap();
    assert_eq!((b.dim_isotropic, b.dim_intersection), (2, 2));
    assert_eq!(b.lagrangian_image, b.isotropic_image);
    assert!(x2.is_symplectic_map(&b.transform).unwrap());
    // I = 0: L goes to the standard position.
    let b = adapted_canonical_basis(&x2, &l, &Subspace::zero(4)).unwrap();
    assert_eq!(b.lagrangian_image, span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
    // Two pairs with the same triple (4, 1, 0) land on the same normal form.
    let other = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let b1 = adapted_canonical_basis(&x2, &l, &span(4, &[&[1, 0, 0, -1]])).unwrap();
    let b2 = adapted_canonical_basis(&x2, &other, &span(4, &[&[0, 0, 1, 0]])).unwrap();
    assert_eq!((b1.lagrangian_image.clone(), b1.isotropic_image.clone()), (b2.lagrangian_image, b2.isotropic_image));
    let (l0, i0) = AdaptedBasis::normal_form(4, 1, 0);
    assert_eq!((b1.lagrangian_image, b1.isotropic_image), (l0, i0));
    assert!(adapted_canonical_basis(&x2, &l, &Subspace::full(4)).is_err());
}

#[test]
fn lagrangian_complement_examples() {
    let e = span(2, &[&[1, 0]]);
    let m = lagrangian_complement(&x1(), &e, &Subspace::zero(2)).unwrap();
    assert!(x1().is_lagrangian(&m).unwrap() && m != e);
    assert!(m.intersect(&e).unwrap().is_zero());

    let x2 = standard_space(2);
    let l = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let j = span(4, &[&[0, 0, 1, 0]]);
    let m = lagrangian_complement(&x2, &l, &j).unwrap();
    assert!(x2.is_lagrangian(&m).unwrap() && j.leq(&m).unwrap() && m.intersect(&l).unwrap().is_zero());

    let jl = span(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
    assert_eq!(lagrangian_complement(&x2, &l, &jl).unwrap(), jl);
    assert!(lagrangian_complement(&x2, &l, &span(4, &[&[1, 0, 0, 0]])).is_err());
}

// ------------------------------------------------------------ relations

#[test]
fn make_relation_examples() {
    let x = standard_space(2);
    let diag = Subspace::span(8, (0..4).map(|i| {
        let mut r = zero_vec(8);
        r[i] = int(1);
        r[i + 4] = int(1);
        r
    }).collect()).unwrap();
    assert_eq!(make_relation(&x, &x, &diag).unwrap(), CanonicalRelation::identity(&x));
    let l = span(2, &[&[1, 2]]);
    let f = make_relation(&SymplecticSpace::unit(), &x1(), &l).unwrap();
    assert_eq!(f.source(), &x1());
    assert!(matches!(make_relation(&x, &x, &Subspace::full(8)), Err(Error::NotLagrangian)));
}

#[test]
fn compose_examples() {
    let x = x1();
    let (f, _) = excess_one_pair();
    let id = CanonicalRelation::identity(&x);
    assert_eq!(compose(&f, &id).unwrap(), f);
    assert_eq!(compose(&id, &f).unwrap(), f);
    let lines = [span(2, &[&[1, 0]]), span(2, &[&[0, 1]]), span(2, &[&[1, 1]]), span(2, &[&[1, -1]])];
    let a = split(&x, &lines[0], &x, &lines[1]);
    let b = split(&x, &lines[2], &x, &lines[3]);
    assert_eq!(compose(&a, &b).unwrap(), split(&x, &lines[0], &x, &lines[3]));
    let x2 = standard_space(2);
    assert!(compose(&a, &CanonicalRelation::identity(&x2)).is_err());
}

#[test]
fn zigzag_example() {
    let x = standard_space(2);
    let (d, e) = unit_counit(&x);
    let id = CanonicalRelation::identity(&x);
    let left = id.product(&e);
    let right = d.product(&id);
    assert_eq!(compose(&left, &right).unwrap(), id);
    assert_eq!(pair_excess(&left, &right).unwrap(), 0);
    let p = Path::new(vec![left, right]).unwrap();
    let nf = ww_normalize(&p).unwrap();
    assert_eq!((nf.shadow, nf.excess), (id, 0));
}

#[test]
fn pair_excess_examples() {
    let (f, g) = excess_one_pair();
    let id = CanonicalRelation::identity(&x1());
    assert_eq!(pair_excess(&f, &id).unwrap(), 0);
    assert_eq!(pair_excess(&id, &g).unwrap(), 0);
    assert_eq!(pair_excess(&f, &g).unwrap(), 1);
    let es = span(2, &[&[0, 1]]);
    let h = split(&x1(), &es, &x1(), &es);
    assert_eq!(pair_excess(&f, &h).unwrap(), 0);
    assert_eq!(compose(&f, &g).unwrap(), g);
}

#[test]
fn congeniality_examples() {
    let (f, g) = excess_one_pair();
    let id = CanonicalRelation::identity(&x1());
    let c = congeniality(&id, &id).unwrap();
    assert!(c.monic && c.transversal);
    let c = congeniality(&f, &g).unwrap();
    assert!(!c.monic && !c.transversal);
    let h = split(&x1(), &span(2, &[&[1, 1]]), &x1(), &span(2, &[&[0, 1]]));
    let c = congeniality(&f, &h).unwrap();
    assert!(c.monic && c.transversal);
}

#[test]
fn transpose_examples() {
    let (f, g) = excess_one_pair();
    assert_eq!(transpose(&transpose(&g)), g);
    assert_eq!(dual_morphism(&dual_morphism(&f)), f);
    let id = CanonicalRelation::identity(&x1());
    assert_eq!(transpose(&id), id);
    let x2 = standard_space(2);
    let rd = reduction_data(&x2, &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
    let rho = reduction_relation(&rd);
    assert!(rho.is_reduction() && !rho.is_coreduction());
    assert!(transpose(&rho).is_coreduction() && !transpose(&rho).is_reduction());
}

#[test]
fn unit_counit_examples() {
    let (d, e) = unit_counit(&SymplecticSpace::unit());
    assert_eq!(d.body().ambient(), 0);
    assert_eq!(e.body().ambient(), 0);
    let (d, e) = unit_counit(&x1());
    assert_eq!((d.body().dim(), d.body().ambient()), (2, 4));
    assert_eq!((e.body().dim(), e.body().ambient()), (2, 4));
    // With the target-first convention, δ̄ transposed is ε; ε_{X̄} has the same diagonal body.
    assert_eq!(dual_morphism(&d).transpose(), e);
    let (_, e_dual) = unit_counit(&x1().dual());
    assert_eq!(e_dual.body(), e.body());
}

#[test]
fn graph_examples() {
    let x = standard_space(2);
    let (d, _) = unit_counit(&x);
    let id = CanonicalRelation::identity(&x);
    assert_eq!(graph(&id), d);
    let (f, g) = excess_one_pair();
    assert_eq!(ungraph(&graph(&f), &x1(), &x1()).unwrap(), f);
    let unit = CanonicalRelation::identity(&SymplecticSpace::unit());
    assert_eq!(graph(&unit), unit);
    assert_eq!(reduced_product(&d, &d, &x).unwrap(), d);
    assert_eq!(reduced_product(&graph(&f), &graph(&g), &x1()).unwrap(), graph(&compose(&f, &g).unwrap()));
    // Through the unit, the reduced product is the monoidal product.
    let l = CanonicalRelation::from_lagrangian(&x1(), &span(2, &[&[1, 0]])).unwrap();
    let m = CanonicalRelation::from_lagrangian(&x1(), &span(2, &[&[1, 1]])).unwrap();
    assert_eq!(
        reduced_product(&l, &graph(&m.transpose()), &SymplecticSpace::unit()).unwrap(),
        graph(&compose(&l, &m.transpose()).unwrap())
    );
}

#[test]
fn reduction_relation_examples() {
    let x2 = standard_space(2);
    let whole = reduction_data(&x2, &Subspace::full(4)).unwrap();
    assert!(reduction_relation(&whole).is_invertible());
    assert_eq!(projector(&whole), CanonicalRelation::identity(&x2));

    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    assert_eq!(projector(&rd), split(&x2, &c, &x2, &c));

    let rd = reduction_data(&x2, &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
    let rho = reduction_relation(&rd);
    assert_eq!(pair_excess(&rho, &rho.transpose()).unwrap(), 1);
    assert_eq!(compose(&rho, &rho.transpose()).unwrap(), CanonicalRelation::identity(&rd.reduced));
}

#[test]
fn classify_examples() {
    let id = CanonicalRelation::identity(&standard_space(2));
    let c = classify_morphism(&id);
    assert!(c.is_reduction && c.is_coreduction);
    let rd = reduction_data(&x1(), &span(2, &[&[1, 0]])).unwrap();
    let c = classify_morphism(&reduction_relation(&rd));
    assert!(c.single_valued && c.surjective && !c.injective && !c.everywhere_defined);
    let l = CanonicalRelation::from_lagrangian(&x1(), &span(2, &[&[1, 0]])).unwrap();
    assert!(classify_morphism(&l).is_coreduction);
}

#[test]
fn factor_examples() {
    let x = standard_space(1);
    let id = CanonicalRelation::identity(&x);
    let fid = factor(&id);
    assert!(fid.check(&id).unwrap().holds());
    assert_eq!(fid.reduction.source().dim(), 3 * x.dim());
    let l = CanonicalRelation::from_lagrangian(&x, &span(2, &[&[2, 1]])).unwrap();
    let fl = factor(&l);
    assert!(fl.check(&l).unwrap().holds());
    assert!(fl.coreduction.source().is_unit());
}

#[test]
fn fixed_space_examples() {
    let x2 = standard_space(2);
    assert_eq!(fixed_space_dim(&CanonicalRelation::identity(&x2)).unwrap(), 4);
    let (a, b) = (span(2, &[&[1, 0]]), span(2, &[&[0, 1]]));
    assert_eq!(fixed_space_dim(&split(&x1(), &a, &x1(), &b)).unwrap(), 0);
    assert_eq!(fixed_space_dim(&split(&x1(), &a, &x1(), &a)).unwrap(), 1);
    let (f, _) = excess_one_pair();
    let g = f.product(&CanonicalRelation::identity(&SymplecticSpace::unit()));
    assert_eq!(fixed_space_dim(&g).unwrap(), 1);
    let not_endo = CanonicalRelation::from_lagrangian(&x1(), &a).unwrap();
    assert!(matches!(fixed_space_dim(&not_endo), Err(Error::NotEndomorphism)));
}

// ------------------------------------------------------------ wwpath

#[test]
fn path_minimal_examples() {
    let x = x1();
    let id = CanonicalRelation::identity(&x);
    let (f, g) = excess_one_pair();
    assert!(path_minimal(&Path::new(vec![id.clone()]).unwrap()).is_empty());
    let p = Path::new(vec![f.clone(), id, g.clone()]).unwrap();
    assert_eq!(path_minimal(&p), Path::new(vec![f.clone(), g.clone()]).unwrap());
    let m = Path::new(vec![f, g]).unwrap();
    assert_eq!(path_minimal(&m), m);
}

#[test]
fn trajectory_examples() {
    let (f, g) = excess_one_pair();
    assert_eq!(trajectory_space(&Path::new(vec![f.clone()]).unwrap()).dim(), 0);
    assert_eq!(trajectory_space(&Path::new(vec![f.clone(), g.clone()]).unwrap()).dim(), 1);
    let id = CanonicalRelation::identity(&standard_space(2));
    assert_eq!(trajectory_space(&Path::new(vec![id.clone(), id.clone(), id]).unwrap()).dim(), 0);

    let nf = ww_normalize(&Path::new(vec![f.clone()]).unwrap()).unwrap();
    assert_eq!((nf.shadow, nf.excess), (f.clone(), 0));
    let h = split(&x1(), &span(2, &[&[1, 1]]), &x1(), &span(2, &[&[0, 1]]));
    let nf = ww_normalize(&Path::new(vec![f.clone(), h.clone()]).unwrap()).unwrap();
    assert_eq!((nf.shadow, nf.excess), (compose(&f, &h).unwrap(), 0));
}

#[test]
fn collapse_examples() {
    let (f, g) = excess_one_pair();
    let id = CanonicalRelation::identity(&x1());
    let p = Path::new(vec![f.clone(), id, g.clone()]).unwrap();
    let q = collapse(&p, 0).unwrap();
    assert_eq!(q.len(), 2);
    assert_eq!(ww_normalize(&q).unwrap(), ww_normalize(&p).unwrap());
    assert!(matches!(collapse(&q, 0), Err(Error::NotCongenial(0))));
}

#[test]
fn path_factorize_examples() {
    let (f, g) = excess_one_pair();
    let single = Path::new(vec![f.clone()]).unwrap();
    let ab = path_factorize(&single).unwrap();
    let nf = ww_normalize(&Path::new(vec![ab.reduction.clone(), ab.coreduction.clone()]).unwrap()).unwrap();
    assert_eq!((nf.shadow, nf.excess), (f.clone(), 0));

    let pair = Path::new(vec![f, g]).unwrap();
    let ab = path_factorize(&pair).unwrap();
    assert!(ab.reduction.is_reduction() && ab.coreduction.is_coreduction());
    let nf = ww_normalize(&Path::new(vec![ab.reduction, ab.coreduction]).unwrap()).unwrap();
    assert_eq!(nf, ww_normalize(&pair).unwrap());
    assert_eq!(nf.excess, 1);
}

#[test]
fn path_product_examples() {
    let (f, g) = excess_one_pair();
    let p = Path::new(vec![f.clone(), g.clone()]).unwrap();
    let x2 = standard_space(2);
    let ids = Path::new(vec![CanonicalRelation::identity(&x2); 2]).unwrap();
    let pi = path_product(&p, &ids);
    let nf = ww_normalize(&pi).unwrap();
    let np = ww_normalize(&p).unwrap();
    assert_eq!(nf.shadow, np.shadow.product(&CanonicalRelation::identity(&x2)));
    let pp = ww_normalize(&path_product(&p, &p)).unwrap();
    assert_eq!(pp.excess, 2);
    assert_eq!(pp.shadow, np.shadow.product(&np.shadow));
    // Uneven lengths are padded with identities.
    let short = Path::new(vec![f]).unwrap();
    assert_eq!(path_product(&short, &p).len(), 2);
}

// ------------------------------------------------------------ finite_rel

#[test]
fn finite_examples() {
    let f = FiniteRelation::new(1, 2, [(0, 0), (0, 1)]).unwrap();
    let g = FiniteRelation::new(2, 1, [(0, 0), (1, 0)]).unwrap();
    assert_eq!(fcompose(&f, &g).unwrap(), FiniteRelation::new(1, 1, [(0, 0)]).unwrap());
    assert!(!fmonic(&f, &g).unwrap());
    assert_eq!(fcompose(&FiniteRelation::identity(1), &f).unwrap(), f);

    let inj = FiniteRelation::new(3, 2, [(1, 0), (2, 1)]).unwrap();
    let inj2 = FiniteRelation::new(2, 2, [(0, 1), (1, 0)]).unwrap();
    assert!(fmonic(&inj, &inj2).unwrap());

    let t = ftrajectories(std::slice::from_ref(&f)).unwrap();
    assert_eq!(t.trajectories, [vec![0, 0], vec![0, 1]].into_iter().collect());
    assert!(ftrajectories(&[f.clone(), FiniteRelation::empty(2, 3)]).unwrap().is_empty());

    let id = FiniteRelation::identity(3);
    assert!(ffactor(&id).check(&id).holds());
    let e = FiniteRelation::empty(2, 2);
    let c = ffactor(&e).check(&e);
    assert!(c.g_single_valued && c.g_surjective && c.recomposes && !c.h_everywhere_defined);
}

// ------------------------------------------------------------ indexed

#[test]
fn icompose_examples() {
    let (f, g) = excess_one_pair();
    let std = IndexMode::Standard;
    let a = IndexedCanonicalRelation::new(f.clone(), 2, std).unwrap();
    let id = IndexedCanonicalRelation::identity(&x1());
    assert!(icompose(&id, &a).unwrap().same_value(&a));
    let fg = icompose(&IndexedCanonicalRelation::plain(f), &IndexedCanonicalRelation::plain(g.clone())).unwrap();
    assert_eq!((fg.relation(), fg.index()), (&g, 1));

    let unit = SymplecticSpace::unit();
    let zero = CanonicalRelation::identity(&unit);
    let j = IndexedCanonicalRelation::new(zero.clone(), 2, std).unwrap();
    let k = IndexedCanonicalRelation::new(zero, 3, std).unwrap();
    assert_eq!(icompose(&j, &k).unwrap().index(), 5);
    assert_eq!(iproduct(&j, &k).index(), 5);
    assert!(iproduct(&a, &IndexedCanonicalRelation::identity(&unit)).same_value(&a));
    assert!(IndexedCanonicalRelation::new(g, -1, std).is_err());
}

#[test]
fn itrace_examples() {
    let x2 = standard_space(2);
    assert_eq!(itrace(&IndexedCanonicalRelation::identity(&x2)).unwrap(), 4);
    let l = span(2, &[&[1, 0]]);
    assert_eq!(itrace(&IndexedCanonicalRelation::plain(split(&x1(), &l, &x1(), &l))).unwrap(), 1);
    let rd = reduction_data(&x2, &span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])).unwrap();
    let down = itranspose_reduction(&rd, IndexMode::Extended).unwrap();
    let r = icompose(&down, &IndexedCanonicalRelation::plain(reduction_relation(&rd))).unwrap();
    assert_eq!((r.relation(), r.index()), (&projector(&rd), -1));
    assert!(icompose(&r, &r).unwrap().same_value(&r));
    assert_eq!(itrace(&r).unwrap(), 2);
    let back = icompose(&IndexedCanonicalRelation::plain(reduction_relation(&rd)), &down).unwrap();
    assert!(back.same_value(&IndexedCanonicalRelation::identity(&rd.reduced)));
    assert!(matches!(itranspose_reduction(&rd, IndexMode::Standard), Err(Error::NegativeIndex(-1))));
}

#[test]
fn sabot_examples() {
    let (e, es) = (span(2, &[&[1, 0]]), span(2, &[&[0, 1]]));
    let pt = |l: &Subspace, k| IndexedLagrangian::new(x1(), l.clone(), k).unwrap();
    assert!(sabot_leq(&pt(&e, 1), &pt(&e, 1)).unwrap());
    assert!(sabot_leq(&pt(&e, 0), &pt(&es, 1)).unwrap());
    assert!(!sabot_leq(&pt(&es, 0), &pt(&e, 0)).unwrap());
    assert!(!sabot_leq(&pt(&e, 2), &pt(&es, 1)).unwrap());
    assert!(!sabot_leq(&pt(&e, 2), &pt(&e, 1)).unwrap());
}

#[test]
fn indexed_reduce_examples() {
    let x2 = standard_space(2);
    let whole = reduction_data(&x2, &Subspace::full(4)).unwrap();
    let a = IndexedLagrangian::new(x2.clone(), span(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]), 3).unwrap();
    assert_eq!(indexed_reduce(&whole, &a).unwrap(), a);

    let (e, es) = (span(2, &[&[1, 0]]), span(2, &[&[0, 1]]));
    let rd = reduction_data(&x1(), &e).unwrap();
    let unit = SymplecticSpace::unit();
    let r = indexed_reduce(&rd, &IndexedLagrangian::new(x1(), e.clone(), 0).unwrap()).unwrap();
    assert_eq!(r, IndexedLagrangian::new(unit.clone(), Subspace::zero(0), 1).unwrap());
    let r = indexed_reduce(&rd, &IndexedLagrangian::new(x1(), es.clone(), 0).unwrap()).unwrap();
    assert_eq!(r, IndexedLagrangian::new(unit, Subspace::zero(0), 0).unwrap());

    let a = IndexedLagrangian::new(x1(), e, 1).unwrap();
    assert_eq!(indexed_reduce(&rd, &ishift(&a, 2)).unwrap(), ishift(&indexed_reduce(&rd, &a).unwrap(), 2));
}

#[test]
fn igraph_compose_examples() {
    let x = x1();
    let id = CanonicalRelation::identity(&x);
    let as_graph = |h: &IndexedCanonicalRelation| {
        IndexedLagrangian::new(h.relation().ambient(), h.relation().body().clone(), h.index()).unwrap()
    };
    let gid = as_graph(&IndexedCanonicalRelation::plain(id));
    let c = igraph_compose(&gid, &gid, &x).unwrap();
    assert_eq!(c, gid);

    let (f, g) = excess_one_pair();
    let (a, b) = (IndexedCanonicalRelation::plain(f), IndexedCanonicalRelation::plain(g));
    let c = igraph_compose(&as_graph(&a), &as_graph(&b), &x).unwrap();
    assert_eq!(c.index(), 1);
    assert_eq!(c, as_graph(&icompose(&a, &b).unwrap()));
}

#[test]
fn normal_form_hyper_examples() {
    let lambda = span(2, &[&[1, 1]]);
    let h = normal_form_hyper(&x1(), &lambda, 0, 0).unwrap();
    assert_eq!((h.space.clone(), h.coisotropic.clone(), h.lagrangian.clone()), (x1(), Subspace::full(2), lambda.clone()));
    let h = normal_form_hyper(&x1(), &lambda, 1, 0).unwrap();
    assert_eq!(h.space.dim(), 4);
    for (k, r) in [(1, 0), (2, 3), (0, 2)] {
        let h = normal_form_hyper(&x1(), &lambda, k, r).unwrap();
        let rd = reduction_data(&h.space, &h.coisotropic).unwrap();
        let red = indexed_reduce(&rd, &IndexedLagrangian::new(h.space.clone(), h.lagrangian, 0).unwrap()).unwrap();
        assert_eq!(red, IndexedLagrangian::new(x1(), lambda.clone(), k as i64).unwrap());
    }
    assert!(normal_form_hyper(&x1(), &Subspace::full(2), 0, 0).is_err());
}

#[test]
fn lift_examples() {
    let x2 = standard_space(2);
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    let lambda = span(2, &[&[1, 2]]);
    let l0 = lift_indexed(&rd, &lambda, 0).unwrap();
    assert!(l0.intersect(&rd.perp).unwrap().is_zero());
    let back = indexed_reduce(&rd, &IndexedLagrangian::new(x2.clone(), l0, 0).unwrap()).unwrap();
    assert_eq!((back.lagrangian(), back.index()), (&lambda, 0));
    let l1 = lift_indexed(&rd, &lambda, 1).unwrap();
    assert!(rd.perp.leq(&l1).unwrap());
    let back = indexed_reduce(&rd, &IndexedLagrangian::new(x2, l1, 0).unwrap()).unwrap();
    assert_eq!((back.lagrangian(), back.index()), (&lambda, 1));
    assert!(lift_indexed(&rd, &lambda, 2).is_err());
    assert!(lift_indexed(&rd, &Subspace::full(2), 0).is_err());
}

#[test]
fn deformation_examples() {
    let x2 = standard_space(2);
    let c = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    let rd = reduction_data(&x2, &c).unwrap();
    let l = span(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let lc = reduce_lagrangian(&rd, &l).unwrap();

    // q = 0: the reduction stays (L^C, k).
    let fam = deformation_family(&rd, &l, &lc, 0).unwrap();
    assert_eq!(fam.eval(&int(0)), l);
    let red = indexed_reduce(&rd, &IndexedLagrangian::new(x2.clone(), fam.eval(&q(3, 2)), 0).unwrap()).unwrap();
    assert_eq!((red.lagrangian(), red.index()), (&lc, 1));

    // k = q = 1, r = 1.
    let lambda = Subspace::span(2, vec![rd.project(&v(&[0, 0, 1, 0])).unwrap()]).unwrap();
    assert_eq!(chow_distance(&rd.reduced, &lc, &lambda).unwrap(), 1);
    let fam = deformation_family(&rd, &l, &lambda, 1).unwrap();
    assert_eq!(fam.eval(&int(0)), l);
    let lt = fam.eval(&int(1));
    assert!(x2.is_lagrangian(&lt).unwrap());
    let red = indexed_reduce(&rd, &IndexedLagrangian::new(x2.clone(), lt, 0).unwrap()).unwrap();
    assert_eq!((red.lagrangian(), red.index()), (&lambda, 0));
    assert!(fam.r <= 1 && fam.r as i64 <= 1 - red.index());

    // r > q is rejected.
    assert!(deformation_family(&rd, &l, &lambda, 0).is_err());
}

#[test]
fn inverse_examples() {
    let x = x1();
    let swap = make_relation(&x, &x, &span(4, &[&[0, 1, 1, 0], &[-1, 0, 0, 1]])).unwrap();
    assert!(swap.is_invertible());
    let a = IndexedCanonicalRelation::new(swap, 3, IndexMode::Extended).unwrap();
    let inv = iinvert(&a).unwrap();
    assert_eq!(inv.index(), -3);
    let id = icompose(&a, &inv).unwrap();
    assert!(id.same_value(&IndexedCanonicalRelation::identity(&x)));
    let (f, _) = excess_one_pair();
    let b = IndexedCanonicalRelation::new(f, 0, IndexMode::Extended).unwrap();
    assert!(matches!(iinvert(&b), Err(Error::NotInvertible)));
}
