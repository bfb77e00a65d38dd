use super::*;
use crate::families::Family;

fn p(f: Family, ell: usize, g: Rational, h: Rational) -> FamilyParams {
    FamilyParams::new(f, ell, g, h).unwrap()
}

fn grid() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for ell in 1..=2 {
        out.push(p(Family::L1, ell, int(2), int(0)));
        out.push(p(Family::L1, ell, rat(7, 3), int(0)));
        out.push(p(Family::L2, ell, int(2), int(0)));
        out.push(p(Family::L2, ell, rat(1, 3), int(0)));
        out.push(p(Family::J1, ell, int(3), int(1)));
        out.push(p(Family::J1, ell, rat(5, 2), rat(1, 2)));
        out.push(p(Family::J2, ell, int(1), int(3)));
        out.push(p(Family::J2, ell, rat(1, 3), int(2)));
    }
    out
}

#[test]
fn discovered_shifts() {
    for params in grid() {
        let b = shifted_basis(&params).unwrap();
        let want = match params.family {
            Family::L1 => (1, 0),
            Family::L2 => (-1, 0),
            Family::J1 => (1, -1),
            Family::J2 => (-1, 1),
        };
        assert_eq!(b.shift, want, "{params}");
    }
}

#[test]
fn l1_first_row() {
    let params = p(Family::L1, 1, int(2), int(0));
    let row = expand_xhat(&params, 0).unwrap();
    assert_eq!(row.get(&0), Some(&int(7)));
    assert_eq!(row.get(&1), Some(&int(-1)));
    assert_eq!(row.len(), 2);
}

#[test]
fn bispectral_grid() {
    for params in grid() {
        let r = verify_bispectral(&params, 8);
        assert!(r.all_passed(), "{params}: {:?}", r.first_failure());
    }
}

#[test]
fn mirror_ratios_positive() {
    let params = p(Family::J1, 1, int(3), int(1));
    let (r, ratios) = norm_ratio_consistency(&params, 5).unwrap();
    assert!(r.all_passed());
    assert_eq!(ratios[0], int(1));
    assert!(ratios.iter().all(|x| x.is_positive()));
}

#[test]
fn low_rows_of_pi2_expansion() {
    let params = p(Family::L1, 1, int(2), int(0));
    let mut bs = Bispectral::new(&params, 6).unwrap();
    assert!(bs.pi2_row(0).is_ok());
    let q = bs.hat(0).clone();
    assert!(matches!(
        bs.expand_in_hats(&UniPoly::one(), 0),
        Err(Error::ExpansionDoesNotExist { n: 0 })
    ));
    assert!(bs.expand_in_hats(&q, 0).is_ok());
}

#[test]
fn perturbation_detected() {
    let params = p(Family::L1, 1, int(2), int(0));
    let r = verify_bispectral_with(&params, 8, Perturbation::Active);
    assert!(!r.all_passed());
}
