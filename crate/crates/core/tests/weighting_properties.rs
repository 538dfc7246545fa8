use proptest::prelude::*;
use sombor_core::extremal::p_grid;
use sombor_core::weighting::{check_property_pstar, p_monotonicity_gap, Exponent};
use sombor_core::WeightFunction;

#[test]
fn symmetric_for_every_kind() {
    let mut kinds = p_grid(&[1.0, 1.5, 2.0, 3.0, -1.0, 0.5, 40.0, f64::INFINITY]);
    kinds.push(WeightFunction::Adjacency);
    let table: Vec<Vec<f64>> = (1..=12)
        .map(|i| (1..=12).map(|j| (i * j) as f64 + 0.5).collect())
        .collect();
    kinds.push(WeightFunction::table("t", &table).unwrap());
    for f in &kinds {
        for a in 1..=12 {
            for b in 1..=12 {
                let x: f64 = f.eval(a, b).unwrap();
                assert_eq!(x, f.eval::<f64>(b, a).unwrap(), "{f} at ({a}, {b})");
                assert!(x > 0.0);
            }
        }
    }
}

#[test]
fn decreasing_in_p_from_two() {
    let grid = [2.0, 2.5, 3.0, 4.0, 8.0, 16.0, f64::INFINITY];
    for x in 1..=12 {
        for y in 1..=12 {
            let values: Vec<f64> = p_grid(&grid).iter().map(|f| f.eval(x, y).unwrap()).collect();
            for (i, w) in values.windows(2).enumerate() {
                assert!(w[1] <= w[0], "({x}, {y}) between p = {} and {}", grid[i], grid[i + 1]);
                if grid[i + 1].is_finite() {
                    assert!(
                        w[1] < w[0],
                        "({x}, {y}) strict between p = {} and {}",
                        grid[i],
                        grid[i + 1]
                    );
                }
            }
        }
    }
}

#[test]
fn pstar_holds_from_p_one() {
    for f in p_grid(&[1.0, 1.5, 2.0, 3.0]) {
        let report = check_property_pstar(&f, 12).unwrap();
        assert!(report.passed(), "{f}: {report:?}");
    }
    assert!(check_property_pstar(&WeightFunction::Adjacency, 12).unwrap().passed());
}

proptest! {
    #[test]
    fn gap_is_nonnegative(x in 1usize..=40, y in 1usize..=40, p1 in 2.0f64..20.0, dp in 0.0f64..20.0) {
        let gap: f64 = p_monotonicity_gap(x, y, Exponent::Finite(p1), Exponent::Finite(p1 + dp)).unwrap();
        prop_assert!(gap >= 0.0);
        let to_inf: f64 = p_monotonicity_gap(x, y, Exponent::Finite(p1), Exponent::Infinite).unwrap();
        prop_assert!(to_inf >= gap);
    }

    #[test]
    fn weight_between_max_and_sum(x in 1usize..=50, y in 1usize..=50, p in 1.0f64..100.0) {
        let w: f64 = WeightFunction::psombor(p).unwrap().eval(x, y).unwrap();
        prop_assert!(w >= x.max(y) as f64 - 1e-12);
        prop_assert!(w <= (x + y) as f64 + 1e-12);
    }
}
