//! Spectral radii against closed forms worked out by hand.

use num_traits::Zero;
use sombor_core::graph::{canonical_certificate, named};
use sombor_core::spectra::{
    char_poly, check_u_bound, coarsest_equitable, largest_real_root, quotient, rho_of, VertexPartition, WeightedMatrix,
};
use sombor_core::{Exact, Graph, WeightFunction, WeightedMatrix64};

fn ps(p: f64) -> WeightFunction {
    WeightFunction::psombor(p).unwrap()
}

fn f(x: usize, y: usize, p: f64) -> f64 {
    ps(p).eval(x, y).unwrap()
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

/// K4 - e on 0..4 (0, 1 of degree 3) with `a` pendants on 0 and `b` on 1.
fn k4e_with_pendants(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    edges.extend((4..4 + a).map(|v| (0, v)));
    edges.extend((4 + a..4 + a + b).map(|v| (1, v)));
    Graph::new(4 + a + b, &edges).unwrap()
}

#[test]
fn u3_quartic() {
    for n in 6..=8 {
        for p in [2.0, 3.0] {
            let g = named::u3(n).unwrap();
            let m: WeightedMatrix64 = WeightedMatrix::from_graph_with(&g, "psombor", |a, b| Ok(f(a, b, p))).unwrap();
            let blocks = vec![vec![0, 2], vec![1], vec![3], (4..n).collect()];
            let q = quotient(&m, &VertexPartition::new(n, blocks).unwrap()).unwrap();
            assert!(q.equitable);
            let (f22, f2n, f1n) = (f(2, 2, p).powi(2), f(2, n - 2, p).powi(2), f(1, n - 2, p).powi(2));
            let k = (n - 4) as f64;
            let expected = [1.0, 0.0, -(2.0 * f22 + 2.0 * f2n + k * f1n), 0.0, 2.0 * k * f22 * f1n];
            let got = char_poly(&q).unwrap();
            for (a, b) in got.iter().zip(expected) {
                assert!(close(*a, b, 1e-10), "n = {n}: {got:?} vs {expected:?}");
            }
            let root = largest_real_root(&expected).unwrap();
            assert!(close(rho_of(&g, &ps(p)).unwrap(), root, 1e-8));
        }
    }
    // n = 6, p = 2: x^4 - 90 x^2 + 544
    let rho = rho_of(&named::u3(6).unwrap(), &ps(2.0)).unwrap();
    assert!(close(rho, ((90.0 + 5924f64.sqrt()) / 2.0).sqrt(), 1e-10));
    assert!((rho - 9.137).abs() < 1e-3);
}

#[test]
fn b2_cubic() {
    for n in 6..=8 {
        for p in [2.0, 3.0] {
            let g = named::b2(n).unwrap();
            let m: WeightedMatrix64 = WeightedMatrix::from_graph_with(&g, "psombor", |a, b| Ok(f(a, b, p))).unwrap();
            let blocks = vec![vec![0], vec![1, 2, 3, 4], (5..n).collect()];
            let q = quotient(&m, &VertexPartition::new(n, blocks).unwrap()).unwrap();
            assert!(q.equitable);
            let (f22, f2n, f1n) = (f(2, 2, p), f(2, n - 1, p), f(1, n - 1, p));
            let k = (n - 5) as f64;
            let expected = [1.0, -f22, -(4.0 * f2n * f2n + k * f1n * f1n), k * f22 * f1n * f1n];
            let got = char_poly(&q).unwrap();
            for (a, b) in got.iter().zip(expected) {
                assert!(close(*a, b, 1e-10), "n = {n}: {got:?} vs {expected:?}");
            }
            assert!(close(
                rho_of(&g, &ps(p)).unwrap(),
                largest_real_root(&expected).unwrap(),
                1e-8
            ));
        }
    }
}

#[test]
fn b3_adjacency_quartic() {
    for n in 6..=10 {
        let g = k4e_with_pendants(n - 5, 1);
        let quartic = [1.0, 0.0, -(n as f64 + 1.0), -4.0, 3.0 * n as f64 - 13.0];
        let rho = rho_of(&g, &WeightFunction::Adjacency).unwrap();
        assert!(close(rho, largest_real_root(&quartic).unwrap(), 1e-8), "n = {n}");
        if n >= 7 {
            // exact quotient polynomial is x times the quartic
            let m = WeightedMatrix::<Exact>::adjacency(&g);
            let part = coarsest_equitable(&g, &WeightFunction::Adjacency).unwrap();
            assert_eq!(part.len(), 5);
            let q = quotient(&m, &part).unwrap();
            assert!(q.equitable);
            let p = char_poly(&q).unwrap();
            let r = |x: i64| Exact::from_integer(x);
            let expected = vec![r(1), r(0), r(-(n as i64 + 1)), r(-4), r(3 * n as i64 - 13), r(0)];
            assert_eq!(p, expected);
            assert!(p.last().unwrap().is_zero());
        }
    }
}

#[test]
fn k4_minus_e_adjacency() {
    let rho = rho_of(&k4e_with_pendants(0, 0), &WeightFunction::Adjacency).unwrap();
    assert!(close(rho, (1.0 + 17f64.sqrt()) / 2.0, 1e-12));
}

#[test]
fn star_quotient_entries() {
    for n in 3..=12 {
        for p in [1.0, 2.0, 5.0] {
            let g = named::star(n).unwrap();
            let m: WeightedMatrix64 = WeightedMatrix::from_graph_with(&g, "psombor", |a, b| Ok(f(a, b, p))).unwrap();
            let q = quotient(&m, &VertexPartition::new(n, vec![vec![0], (1..n).collect()]).unwrap()).unwrap();
            let w = f(1, n - 1, p);
            assert!(q.equitable);
            assert!(close(q.entries[0][1], (n - 1) as f64 * w, 1e-12));
            assert!(close(q.entries[1][0], w, 1e-12));
            assert!(close(rho_of(&g, &ps(p)).unwrap(), w * ((n - 1) as f64).sqrt(), 1e-10));
        }
    }
}

#[test]
fn u_bound_on_valid_triples() {
    let mut checked = 0;
    for n in 8..=40 {
        for n2 in 0..=(n - 3) / 2 {
            let n1 = n - 3 - n2;
            let big = (n1 + 3) as f64;
            if big >= (1.0 + (6.0 * n as f64 + 10.0).sqrt()).powi(2) / 9.0 {
                assert!(check_u_bound(n, n1, n2).unwrap(), "({n}, {n1}, {n2})");
                checked += 1;
            } else {
                assert!(check_u_bound(n, n1, n2).is_err());
            }
        }
    }
    assert!(checked >= 20);
    // the bound is close to tight for U(n, n - 4, 1)
    let rho = rho_of(&named::unicyclic_u(20, 16, 1).unwrap(), &WeightFunction::Adjacency).unwrap();
    assert!(rho < 19f64.sqrt() && rho > 19f64.sqrt() - 0.1);
}

#[test]
fn reconstructions_are_distinct_graphs() {
    let n = 8;
    let all = [
        named::u3(n).unwrap(),
        named::u5(n).unwrap(),
        named::b2(n).unwrap(),
        named::b4(n).unwrap(),
        k4e_with_pendants(n - 4, 0),
        k4e_with_pendants(n - 5, 1),
    ];
    let certs: std::collections::BTreeSet<_> = all.iter().map(canonical_certificate).collect();
    assert_eq!(certs.len(), all.len());
}

mod roots {
    use proptest::prelude::*;
    use sombor_core::spectra::largest_real_root;

    proptest! {
        #[test]
        fn largest_root_of_product(roots in proptest::collection::vec(-50.0f64..50.0, 1..=6)) {
            let mut c = vec![1.0];
            for r in &roots {
                let mut next = c.clone();
                next.push(0.0);
                for (i, x) in c.iter().enumerate() {
                    next[i + 1] -= r * x;
                }
                c = next;
            }
            let top = roots.iter().cloned().fold(f64::MIN, f64::max);
            let got = largest_real_root(&c).unwrap();
            // clustered roots are ill-conditioned; residual-level agreement
            let tol = 1e-6 * top.abs().max(1.0) + 1e-3 * roots.iter().filter(|r| (*r - top).abs() < 1e-2).count().saturating_sub(1) as f64;
            prop_assert!((got - top).abs() <= tol, "{got} vs {top} for {roots:?}");
        }
    }
}
