use xopkit_core::bispectral::norm_ratio_consistency;
use xopkit_core::numerics::{closed_form_levels, fd_spectrum, orthogonality_residual};
use xopkit_core::suite::parameter_grid;
use xopkit_core::{rat, Family, FamilyParams, Tier};

fn grid() -> Vec<FamilyParams> {
    parameter_grid(&Family::ALL, 1..=3)
}

#[test]
fn gram_residuals_and_mirror_ratios() {
    for params in grid() {
        let order = if params.family.is_laguerre() {
            300
        } else {
            200
        };
        let tol = if params.family.is_laguerre() {
            1e-6
        } else {
            1e-10
        };
        let o = orthogonality_residual(&params, 6, order).unwrap();
        let (_, exact) = norm_ratio_consistency(&params, 6).unwrap();
        let worst = o
            .diagonal_ratios
            .iter()
            .zip(&exact)
            .map(|(a, b)| {
                let b = xopkit_core::ratpoly::to_f64(b);
                (a - b).abs() / b.abs()
            })
            .fold(0.0, f64::max);
        println!(
            "{params}: residual {:.3e}, ratio error {:.3e}",
            o.max_residual, worst
        );
        assert!(o.max_residual < tol, "{params}");
        assert!(worst < 1e-8, "{params}");
    }
}

#[test]
fn finite_difference_isospectrality() {
    for params in grid() {
        let exact = closed_form_levels(&params, 4);
        for side in [Tier::Plus, Tier::Minus] {
            let coarse = fd_spectrum(&params, side, 4000, 4)
                .unwrap()
                .relative_errors(&exact);
            let fine = fd_spectrum(&params, side, 8000, 4)
                .unwrap()
                .relative_errors(&exact);
            let ratio = coarse[0] / fine[0];
            println!("{params} {side:?}: err {:.3e} ratio {ratio:.3}", fine[0]);
            assert!(fine.iter().all(|&e| e < 1e-2), "{params}");
            assert!((3.5..=4.5).contains(&ratio), "{params} {side:?} {ratio}");
        }
    }
}

// With g+ℓ = 4/3 the minus-side ground state behaves like x^{4/3} at the
// origin and the scheme converges at the reduced rate h^{5/3}.
#[test]
fn low_regularity_rate() {
    let params = FamilyParams::laguerre(Family::L2, 1, rat(1, 3)).unwrap();
    let exact = closed_form_levels(&params, 1);
    let coarse = fd_spectrum(&params, Tier::Minus, 4000, 1)
        .unwrap()
        .relative_errors(&exact)[0];
    let fine = fd_spectrum(&params, Tier::Minus, 8000, 1)
        .unwrap()
        .relative_errors(&exact)[0];
    let expected = 2f64.powf(5.0 / 3.0);
    assert!((coarse / fine - expected).abs() < 0.1, "{}", coarse / fine);
    assert!(fine < 1e-5);
}

#[test]
fn gram_residuals_shrink_with_order() {
    for params in grid().into_iter().filter(|p| p.ell == 1) {
        let residual = |order| orthogonality_residual(&params, 6, order).unwrap().max_residual;
        let early: Vec<f64> = [4, 8, 16].into_iter().map(residual).collect();
        assert!(early[0] > early[1] && early[1] > early[2], "{params}: {early:?}");
        for order in [100, 200, 400] {
            assert!(residual(order) < 1e-12, "{params} at order {order}");
        }
    }
}

#[test]
fn laguerre_weights_nonnegative_and_mostly_positive() {
    use xopkit_core::numerics::{gauss_rule, RuleKind};
    let r = gauss_rule(RuleKind::GaussLaguerre { alpha: 2.5 }, 300).unwrap();
    assert!(r.weights.iter().all(|&w| w >= 0.0));
    assert!(r.weights.iter().take(200).all(|&w| w > 0.0));
    assert!(r.nodes.windows(2).all(|w| w[0] < w[1]) && r.nodes[0] > 0.0);
    let mass: f64 = r.weights.iter().sum();
    assert!((mass - 3.323350970447843).abs() < 1e-12);
}
