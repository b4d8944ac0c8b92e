//! Worked examples for each module, with brute-force oracles where the
//! expected value is computed rather than read off.

use std::collections::BTreeMap;
use std::sync::Arc;

use gt_core::bggmod::{
    action_matrix, cyclicity_check, gamma_action, invariant_preimage, jordan_profile, kernel_check, max_block_witness,
    GammaVector, SubsystemFrame,
};
use gt_core::coxeter::{CoxeterGroup, ParabolicSet, Root, RootSystem};
use gt_core::galois::{seed_normalize, EquivClass, GaloisConfig, GtModule, OperatorVector, Sign, Verdict};
use gt_core::linalg::Matrix;
use gt_core::polyring::{parse_poly, LinearForm, Perm, Point, Polynomial, Shape, StructuredFraction};
use gt_core::rational::{frac, int};
use gt_core::schubert::{divided_difference, nabla, SchubertCalculus};

fn poly(src: &str, mu: &[usize]) -> Polynomial {
    parse_poly(src, &Shape::new(mu)).unwrap()
}

fn group(mu: &[usize]) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::new(RootSystem::type_a(&Shape::new(mu))).unwrap())
}

fn point(mu: &[usize], coords: &[i64]) -> Point {
    Point::from_ints(&Shape::new(mu), coords).unwrap()
}

fn toy_config(mu: &[usize], plus: &str, minus: &str) -> GaloisConfig {
    GaloisConfig::new(mu, 1, vec![(1, Sign::Plus, poly(plus, mu)), (1, Sign::Minus, poly(minus, mu))]).unwrap()
}

#[test]
fn polynomial_evaluation_and_translation() {
    let mu = [2];
    assert_eq!(poly("0", &mu).eval(&point(&mu, &[4, 5])).unwrap(), int(0));
    assert_eq!(poly("x[1,1]*x[1,2]", &mu).eval(&point(&mu, &[1, 0])).unwrap(), int(0));
    let v = Point::new(&Shape::new(&mu), vec![frac(3, 2), frac(1, 4)]).unwrap();
    assert_eq!(poly("x[1,1]^2 - x[1,2]", &mu).eval(&v).unwrap(), int(2));
    assert_eq!(poly("x[1,1]", &mu).translate(&point(&mu, &[1, 0])), poly("x[1,1] + 1", &mu));
    let p = poly("x[1,1]^3 - 2*x[1,2]", &mu);
    assert_eq!(p.translate(&point(&mu, &[0, 0])), p);
    assert_eq!(poly("x[1,1]*x[1,2]", &mu).translate(&point(&mu, &[1, 0])), poly("x[1,1]*x[1,2] + x[1,2]", &mu));
}

#[test]
fn permutation_and_apolar_pairing() {
    let mu = [2];
    let s = Perm::transposition(2, 0, 1);
    let delta = poly("x[1,1] - x[1,2]", &mu);
    assert_eq!(poly("x[1,1]", &mu).permute(&Perm::identity(2)), poly("x[1,1]", &mu));
    assert_eq!(poly("x[1,1]", &mu).permute(&s), poly("x[1,2]", &mu));
    assert_eq!(delta.permute(&s), -delta.clone());
    assert_eq!(poly("x[1,1]", &mu).theta_apply(&poly("x[1,1]^2", &mu)), poly("2*x[1,1]", &mu));
    let g = poly("x[1,1]^3 - x[1,2] + 4", &mu);
    assert_eq!(poly("1", &mu).theta_apply(&g), g);
    assert_eq!(poly("x[1,1]*x[1,2]", &mu).theta_apply(&poly("x[1,1]^2*x[1,2]", &mu)), poly("2*x[1,1]", &mu));
    assert_eq!(poly("x[1,1]", &mu).theta_pair(&poly("x[1,2]", &mu)), int(0));
    assert_eq!(poly("x[1,1]", &mu).theta_pair(&poly("x[1,1]", &mu)), int(1));
    assert_eq!(delta.theta_pair(&delta), int(2));
}

#[test]
fn division_and_fractions() {
    let mu = [2];
    let shape = Shape::new(&mu);
    let l = LinearForm::root(2, 0, 1);
    assert_eq!(poly("x[1,1]^2 - x[1,2]^2", &mu).exact_divide(&l), Some(poly("x[1,1] + x[1,2]", &mu)));
    assert_eq!(poly("0", &mu).exact_divide(&l), Some(poly("0", &mu)));
    assert_eq!(poly("x[1,1]", &mu).exact_divide(&l), None);
    let f = StructuredFraction::new(poly("x[1,1]^2 - x[1,2]^2", &mu), vec![l.clone()]).unwrap();
    assert_eq!(f.as_polynomial(), Some(&poly("x[1,1] + x[1,2]", &mu)));
    let p = poly("x[1,2]^2 + 3", &mu);
    assert_eq!(StructuredFraction::from(p.clone()).as_polynomial(), Some(&p));
    let inv = StructuredFraction::new(Polynomial::one(&shape), vec![l.clone()]).unwrap();
    assert_eq!(inv.denominator().len(), 1);
    assert_eq!(inv.eval(&point(&mu, &[1, 0])).unwrap(), int(1));
    assert_eq!(inv.eval(&point(&mu, &[0, 0])).unwrap_err().kind(), "PoleAt");
    let g = StructuredFraction::new(poly("x[1,1] + x[1,2]", &mu), vec![l]).unwrap();
    assert_eq!(g.eval(&point(&mu, &[2, 1])).unwrap(), int(3));
}

/// Brute-force permutation data for S_n: inversion counts and covers.
fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn group_enumeration() {
    let a1 = group(&[2]);
    assert_eq!((a1.order(), a1.length(a1.longest())), (2, 1));
    let s3 = group(&[3]);
    assert_eq!(s3.order(), all_perms(3).len());
    assert_eq!(s3.length(s3.longest()), all_perms(3).iter().map(|p| inversions(p)).max().unwrap());
    assert_eq!(s3.reduced_words(s3.longest()).len(), 2);
    assert_eq!(group(&[2, 2]).order(), 4);
}

#[test]
fn bruhat_covers_and_chains() {
    let a1 = group(&[2]);
    let covers = a1.bruhat_covers(a1.identity());
    assert_eq!(covers.len(), 1);
    assert_eq!(covers[0].1, Root::new(0, 1));
    assert!(a1.bruhat_covers(a1.longest()).is_empty());
    assert_eq!(a1.saturated_chains(a1.identity(), a1.longest()).unwrap().len(), 1);

    let s3 = group(&[3]);
    let s1 = s3.parse_word("s1").unwrap();
    let mut got: Vec<String> = s3.bruhat_covers(s1).iter().map(|(w, _)| s3.word_string(*w)).collect();
    got.sort();
    assert_eq!(got, vec!["s1*s2", "s2*s1"]);
    let same = s3.saturated_chains(s1, s1).unwrap();
    assert_eq!(same.len(), 1);
    assert!(same[0].weights.is_empty());
    assert!(s3.bruhat_leq(s1, s1));

    // Oracle: count maximal paths in the cover graph of S_3 built from
    // one-line notation, covers being transposition products with one more inversion.
    let perms = all_perms(3);
    let covers_of = |p: &Vec<usize>| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let mut q = p.clone();
                q.swap(i, j);
                if inversions(&q) == inversions(p) + 1 {
                    out.push(q);
                }
            }
        }
        out
    };
    fn count(p: &Vec<usize>, top: &Vec<usize>, covers_of: &dyn Fn(&Vec<usize>) -> Vec<Vec<usize>>) -> usize {
        if p == top {
            return 1;
        }
        covers_of(p).iter().map(|q| count(q, top, covers_of)).sum()
    }
    let top = perms.iter().max_by_key(|p| inversions(p)).unwrap().clone();
    let expected = count(&vec![0, 1, 2], &top, &covers_of);
    assert_eq!(s3.saturated_chains(s3.identity(), s3.longest()).unwrap().len(), expected);
}

#[test]
fn parabolic_decomposition() {
    let s3 = group(&[3]);
    let s1 = s3.parse_word("s1").unwrap();
    let theta = ParabolicSet::new([0]);
    assert_eq!(s3.coset_decompose(s1, &theta), (s3.identity(), s1));
    let w = s3.parse_word("s1*s2").unwrap();
    assert_eq!(s3.coset_decompose(w, &ParabolicSet::new([])), (w, s3.identity()));
    let (rep, part) = s3.coset_decompose(s3.longest(), &theta);
    assert_eq!(rep, s3.mul(s3.longest(), s3.inverse(s3.longest_in(&theta))));
    assert_eq!(s3.length(rep) + s3.length(part), s3.length(s3.longest()));

    assert_eq!(s3.min_coset_reps(&ParabolicSet::new([0, 1])), vec![s3.identity()]);
    assert_eq!(s3.min_coset_reps(&ParabolicSet::new([])).len(), 6);
    // Oracle: σ is minimal in σW_θ iff ℓ(σ s₁) > ℓ(σ).
    let expected: Vec<_> = s3.elements().filter(|&w| s3.length(s3.right_mul(w, 0)) > s3.length(w)).collect();
    let mut got = s3.min_coset_reps(&theta);
    got.sort();
    let mut expected = expected;
    expected.sort();
    assert_eq!(got, expected);
    let names: Vec<String> = s3.min_coset_reps(&theta).iter().map(|&w| s3.word_string(w)).collect();
    assert_eq!(names, vec!["e", "s2", "s1*s2"]);
}

#[test]
fn stabilizers() {
    let s3 = group(&[3]);
    let d = s3.stabilizer_data(&point(&[3], &[4, 1, 0]));
    assert!(d.vanishing.is_empty() && d.is_standard);
    let d = s3.stabilizer_data(&point(&[3], &[0, 0, 5]));
    assert_eq!(d.vanishing, vec![Root::new(0, 1)]);
    assert!(d.is_standard);
    assert_eq!(s3.parabolic_elements(&d.theta).len(), 2);
    let d = s3.stabilizer_data(&point(&[3], &[0, 5, 0]));
    assert_eq!(d.vanishing, vec![Root::new(0, 2)]);
    assert!(!d.is_standard);
}

#[test]
fn divided_difference_values() {
    let mu = [3];
    let s3 = group(&mu);
    let s1 = s3.parse_word("s1").unwrap();
    let sym = poly("x[1,1] + x[1,2] + x[1,3]^2", &mu);
    assert!(nabla(&s3, 0, &sym).unwrap().is_zero());
    assert_eq!(nabla(&s3, 0, &poly("x[1,1]^2", &mu)).unwrap(), poly("x[1,1] + x[1,2]", &mu));
    let f = StructuredFraction::new(Polynomial::one(&Shape::new(&mu)), vec![LinearForm::root(3, 0, 2)]).unwrap();
    let expected = StructuredFraction::new(
        -Polynomial::one(&Shape::new(&mu)),
        vec![LinearForm::root(3, 0, 2), LinearForm::root(3, 1, 2)],
    )
    .unwrap();
    assert_eq!(divided_difference(&s3, s1, &f).unwrap(), expected);
    assert_eq!(divided_difference(&s3, s3.identity(), &sym).unwrap(), sym);

    let a1 = group(&[2]);
    assert_eq!(divided_difference(&a1, a1.longest(), &poly("x[1,1] - x[1,2]", &[2])).unwrap(), poly("2", &[2]));
    let calc = SchubertCalculus::new(s3.clone()).unwrap();
    assert_eq!(divided_difference(&s3, s3.longest(), calc.delta()).unwrap(), poly("6", &mu));
}

#[test]
fn schubert_polynomials_and_expansion() {
    let a1 = SchubertCalculus::new(group(&[2])).unwrap();
    let g = a1.group().clone();
    assert_eq!(a1.schubert_poly(g.identity()), &poly("1", &[2]));
    assert_eq!(a1.schubert_poly(g.longest()), &poly("1/2*x[1,1] - 1/2*x[1,2]", &[2]));
    assert_eq!(a1.ps_poly(g.longest()), &poly("x[1,1] - x[1,2]", &[2]));
    assert_eq!(a1.ps_chain_poly(g.identity(), g.longest()).unwrap(), poly("x[1,1] - x[1,2]", &[2]));
    let zero = point(&[2], &[0, 0]);
    let x = a1.schubert_expand(&poly("x[1,1]", &[2]).into(), &zero).unwrap();
    assert_eq!(x.get(&g.identity()).cloned().unwrap_or_default(), int(0));
    assert_eq!(x[&g.longest()], int(1));
    let one = a1.schubert_expand(&poly("1", &[2]).into(), &zero).unwrap();
    assert_eq!(one.into_iter().filter(|(_, c)| *c != int(0)).collect::<Vec<_>>(), vec![(g.identity(), int(1))]);
    assert_eq!(a1.d_at(g.longest(), &point(&[2], &[1, 0]), &poly("x[1,1]*x[1,2]", &[2])), int(-1));

    let mu = [3];
    let s3 = SchubertCalculus::new(group(&mu)).unwrap();
    let g = s3.group().clone();
    let s1 = g.parse_word("s1").unwrap();
    let s2 = g.parse_word("s2").unwrap();
    // 𝔖_{s1} − x₁ is a multiple of e₁.
    let diff = s3.schubert_poly(s1) - &poly("x[1,1]", &mu);
    let e1 = poly("x[1,1] + x[1,2] + x[1,3]", &mu);
    let c = diff.coeff(&gt_core::polyring::Monomial::var(3, 0));
    assert_eq!(diff, e1.scale(&c));
    assert_eq!(s3.lr_coeff(s1, s2, g.parse_word("s1*s2").unwrap()), int(1));
    assert_eq!(s3.lr_coeff(s1, s2, g.parse_word("s2*s1").unwrap()), int(1));
    assert_eq!(s3.lr_coeff(s1, s2, s1), int(0));
    assert_eq!(s3.ps_poly(s1), &poly("x[1,1] - x[1,2]", &mu));
    assert_eq!(s3.ps_poly(s2), &poly("x[1,2] - x[1,3]", &mu));
    assert_eq!(s3.ps_chain_poly(g.identity(), g.longest()).unwrap(), *s3.ps_poly(g.longest()));
    assert_eq!(s3.ps_chain_poly(s1, s1).unwrap(), poly("1", &mu));
    let gamma = poly("x[1,1]^2 + x[1,2]^2 + x[1,3]^2", &mu);
    let v = point(&mu, &[3, 1, 0]);
    // An invariant expands to γ(v)·𝔖_e only at a W-fixed point; elsewhere
    // t_v γ is no longer invariant.
    let fixed = point(&mu, &[2, 2, 2]);
    let expand = s3.schubert_expand(&gamma.clone().into(), &fixed).unwrap();
    let nonzero: Vec<_> = expand.into_iter().filter(|(_, c)| *c != int(0)).collect();
    assert_eq!(nonzero, vec![(g.identity(), int(12))]);
    let generic = s3.schubert_expand(&gamma.into(), &v).unwrap();
    assert_eq!(generic[&g.identity()], int(10));
    assert_eq!(generic[&s1], int(4));
    let f = poly("x[1,1]^2*x[1,3] - x[1,2]", &mu);
    for w in g.elements() {
        assert_eq!(s3.d_pair_at(w, w, &v, &f), f.eval(&v).unwrap());
        assert_eq!(s3.d_pair_at(g.identity(), w, &v, &f), s3.d_at(w, &v, &f));
    }
}

fn a1_frame() -> (SubsystemFrame, Point) {
    (SubsystemFrame::full(group(&[2])).unwrap(), point(&[2], &[1, 0]))
}

#[test]
fn gamma_module_a1() {
    let (frame, v) = a1_frame();
    let g = frame.group().clone();
    let x1x2 = poly("x[1,1]*x[1,2]", &[2]);
    let top = GammaVector::basis_vector(&frame, &v, g.longest()).unwrap();
    let y = gamma_action(&frame, &x1x2, &top).unwrap();
    assert_eq!((y.coeff(g.longest()), y.coeff(g.identity())), (int(0), int(-1)));
    let m = action_matrix(&frame, &x1x2, &v).unwrap();
    assert_eq!(m.matrix, Matrix::from_rows(vec![vec![int(0), int(0)], vec![int(-1), int(0)]]));
    // D_at(s, (1,0), x₁+x₂) vanishes because e₁ is symmetric, so the
    // off-diagonal entry is 0.
    let e1 = action_matrix(&frame, &poly("x[1,1] + x[1,2]", &[2]), &v).unwrap();
    assert_eq!(e1.matrix, Matrix::identity(2));
    assert_eq!(frame.calculus().d_at(g.longest(), &v, &poly("x[1,1] + x[1,2]", &[2])), int(0));
    let c = gamma_action(&frame, &poly("7", &[2]), &top).unwrap();
    assert_eq!(c.coeff(g.longest()), int(7));
    let bottom = GammaVector::basis_vector(&frame, &v, g.identity()).unwrap();
    let b = gamma_action(&frame, &x1x2, &bottom).unwrap();
    assert!(b.is_zero());

    assert_eq!(invariant_preimage(&frame, g.identity(), &v).unwrap(), poly("1", &[2]));
    let pre = invariant_preimage(&frame, g.longest(), &v).unwrap();
    assert_eq!(frame.calculus().d_at(g.longest(), &v, &pre), int(1));
    assert_eq!(frame.calculus().d_at(g.identity(), &v, &pre), int(0));

    assert_eq!(jordan_profile(&frame, &poly("3", &[2]), &v).unwrap().blocks, vec![1, 1]);
    assert_eq!(jordan_profile(&frame, &x1x2, &v).unwrap().blocks, vec![2]);
    assert_eq!(jordan_profile(&frame, &max_block_witness(&frame, &v).unwrap(), &v).unwrap().blocks, vec![2]);
    assert!(cyclicity_check(&frame, &top).unwrap());
    assert!(kernel_check(&frame, &bottom));
    assert!(!cyclicity_check(&frame, &bottom).unwrap());
}

#[test]
fn single_basis_element_frame() {
    let frame = SubsystemFrame::full(group(&[3])).unwrap();
    let v = point(&[3], &[0, 0, 0]);
    let gamma = poly("x[1,1]*x[1,2]*x[1,3] + 2", &[3]);
    let m = action_matrix(&frame, &gamma, &v).unwrap();
    // v = 0 is fixed by all of W, so 𝒟(Ω, v) is one-dimensional.
    assert_eq!(m.basis.len(), 1);
    assert_eq!(m.matrix, Matrix::from_rows(vec![vec![int(2)]]));
}

#[test]
fn max_block_for_s3_generic() {
    let frame = SubsystemFrame::full(group(&[3])).unwrap();
    let v = point(&[3], &[3, 1, 0]);
    let p = jordan_profile(&frame, &max_block_witness(&frame, &v).unwrap(), &v).unwrap();
    assert_eq!(p.blocks[0], 4);
    assert!(p.blocks[1..].iter().all(|&b| b < 4));
}

#[test]
fn seeds_and_cone() {
    let cfg = toy_config(&[2], "1", "1");
    let s = seed_normalize(&point(&[2], &[5, 5]), &cfg);
    assert_eq!((s.point.clone(), s.shift.clone()), (point(&[2], &[5, 5]), vec![0, 0]));
    assert!(s.sigma.is_identity());
    let s = seed_normalize(&point(&[2], &[0, 1]), &cfg);
    assert_eq!((s.point, s.shift), (point(&[2], &[0, 0]), vec![0, -1]));

    let m = GtModule::new(cfg, point(&[2], &[0, 0])).unwrap();
    assert!(m.zset_member(&[0, 0]));
    assert_eq!(m.classes(&[0, 0]), vec![EquivClass { k: 1, start: 0, end: 1 }]);
    assert_eq!(m.classes(&[2, 2]), vec![EquivClass { k: 1, start: 0, end: 1 }]);
    let c = m.classes(&[2, 2])[0];
    assert_eq!((c.a_plus(), c.a_minus()), (0, 1));
    assert!(m.shift_legal(&[0, 0], 0, Sign::Plus));
    assert!(!m.shift_legal(&[0, 0], 1, Sign::Plus));
    assert!(m.shift_legal(&[0, 0], 1, Sign::Minus));
    assert!(m.shift_legal(&[1, 0], 0, Sign::Minus) && m.shift_legal(&[1, 0], 1, Sign::Plus));
}

#[test]
fn generator_terms_for_toy() {
    let cfg = toy_config(&[2], "1", "1");
    let shape = cfg.shape().clone();
    for sign in Sign::BOTH {
        let d = cfg.dagger(1, sign);
        let expect =
            |a: usize, b: usize| StructuredFraction::new(poly("1/2", &[2]), vec![LinearForm::root(2, a, b)]).unwrap();
        let by_var: BTreeMap<usize, &StructuredFraction> =
            d.iter().map(|t| (t.shift.iter().position(|&x| x != 0).unwrap(), &t.coef)).collect();
        assert_eq!(by_var[&0], &expect(0, 1));
        assert_eq!(by_var[&1], &expect(1, 0));
        assert!(d.iter().all(|t| t.shift.iter().sum::<i64>() == -sign.unit()));
    }
    let m = GtModule::new(cfg, Point::zero(&shape)).unwrap();
    let forms = m.generator_forms(1, Sign::Plus, &[0, 0]);
    assert_eq!(forms.len(), 1);
    assert!(forms[0].coef.denominator().is_empty());
    assert_eq!(m.group().length(forms[0].omega), 1);
    // Distinct coordinates: every class is a singleton and the dd-form is the dagger sum.
    let forms = m.generator_forms(1, Sign::Minus, &[1, 0]);
    assert_eq!(forms.len(), 2);
    assert!(forms.iter().all(|t| t.omega == m.group().identity()));
}

#[test]
fn toy_generator_action() {
    let cfg = toy_config(&[2], "1", "1");
    let m = GtModule::new(cfg, point(&[2], &[0, 0])).unwrap();
    let g = m.group().clone();
    let e = OperatorVector::basis(vec![0, 0], g.identity());
    let s = g.longest();
    let minus = m.act_generator(1, Sign::Minus, &e).unwrap();
    assert_eq!(minus, OperatorVector::basis(vec![1, 0], s).scale(&frac(1, 2)));
    let plus = m.act_generator(1, Sign::Plus, &e).unwrap();
    assert_eq!(plus, OperatorVector::basis(vec![0, -1], s).scale(&frac(-1, 2)));
    assert!(m.act_generator(1, Sign::Plus, &OperatorVector::new()).unwrap().is_empty());

    // At z = (1,0) the classes are singletons; the action is the dagger sum
    // with scalar coefficients f/(difference) at v̂ + z.
    let x = OperatorVector::basis(vec![1, 0], g.identity());
    let y = m.act_generator(1, Sign::Minus, &x).unwrap();
    assert_eq!(y.coeff(&[2, 0], g.identity()), frac(1, 2));
    assert_eq!(y.coeff(&[1, 1], g.identity()), frac(-1, 2));
    assert_eq!(y.len(), 2);

    let gamma = poly("x[1,1]^2 + x[1,2]^2 + 5", &[2]);
    assert_eq!(m.act_gamma(&poly("3", &[2]), &minus).unwrap(), minus.scale(&int(3)));
    assert_eq!(m.act_gamma(&gamma, &x).unwrap(), x.scale(&int(6)));

    let two = e.add(&OperatorVector::basis(vec![2, -1], g.identity()));
    let parts = m.character_decompose(&two);
    assert_eq!(parts.len(), 2);
    assert_eq!(m.character_decompose(&e).len(), 1);
    assert!(m.character_decompose(&OperatorVector::new()).is_empty());
}

#[test]
fn simplicity_examples() {
    let toy = GtModule::new(toy_config(&[2], "1", "1"), point(&[2], &[0, 0])).unwrap();
    assert_eq!(toy.simplicity_check(2).unwrap(), Verdict::HoldsEverywhere);
    // f = x_{1,1} is not fixed by the full S_2, but the stabilizer of e_{1,1} in S_2 is trivial.
    let vanish = GtModule::new(toy_config(&[2], "x[1,1]", "1"), point(&[2], &[0, 0])).unwrap();
    assert!(matches!(vanish.simplicity_check(2).unwrap(), Verdict::Fails { ref z, .. } if z == &vec![0, 0]));
    let half = GtModule::new(toy_config(&[2], "x[1,1] - 1/2", "1"), point(&[2], &[0, 0])).unwrap();
    assert_eq!(half.simplicity_check(3).unwrap(), Verdict::HoldsEverywhere);

    let g = toy.group().clone();
    let e = g.identity();
    assert!(toy.reachability_probe((&[0, 0], e), (&[0, 0], e), 0).unwrap());
    assert!(toy.reachability_probe((&[0, 0], e), (&[1, 0], g.longest()), 1).unwrap());

    let blocking = GtModule::new(toy_config(&[1], "1", "x[1,1] - 1"), point(&[1], &[0])).unwrap();
    let e = blocking.group().identity();
    assert!(blocking.reachability_probe((&[0], e), (&[1], e), 12).unwrap());
    assert!(!blocking.reachability_probe((&[0], e), (&[2], e), 12).unwrap());
}

#[test]
fn config_validation() {
    let shape = Shape::new(&[2]);
    let one = Polynomial::one(&shape);
    let err = GaloisConfig::new(&[2], 1, vec![(1, Sign::Plus, one.clone())]).unwrap_err();
    assert_eq!(err.kind(), "InvalidConfig");
    let err = GaloisConfig::new(&[2], 2, vec![]).unwrap_err();
    assert_eq!(err.kind(), "InvalidConfig");
    // μ = (3): f must be symmetric in x_{1,2}, x_{1,3}.
    let bad = poly("x[1,2]", &[3]);
    let err = GaloisConfig::new(&[3], 1, vec![(1, Sign::Plus, bad.clone()), (1, Sign::Minus, bad)]).unwrap_err();
    assert_eq!(err.kind(), "NotInvariant");
    let cfg = toy_config(&[2], "1", "1");
    let err = GtModule::new(cfg, point(&[2], &[0, 1])).unwrap_err();
    assert_eq!(err.kind(), "NotStandard");
    let _ = one;
}
