mod common;

use nonkissing::blossom;
use nonkissing::corpus::{cambrian, corpus, cycle, double_cycle, double_path, reversed_path};
use nonkissing::enumerate::enumerate_walks;
use nonkissing::kiss::mutual_kiss;
use nonkissing::surface::{
    crossing_count, curve_of_walk, dual_dissection, invariants, maps_isomorphic, quiver_from_surface, strip,
    surface_from_blossom, surface_from_quiver, swap_dissections, walk_of_curve, Invariants, Which,
};
use nonkissing::SurfaceError;

fn inv(q: &nonkissing::BoundQuiver) -> Invariants {
    invariants(&surface_from_quiver(q)).unwrap()
}

#[test]
fn family_tables() {
    for o in ["r", "rl", "lrl", "rrrr"] {
        let i = inv(&cambrian(o).unwrap());
        assert_eq!((i.b, i.p, i.p_dual, i.genus), (1, 0, 0, 0), "{o}");
    }
    for n in 1..=5 {
        let i = inv(&reversed_path(n));
        assert_eq!((i.b, i.p_dual, i.genus), (1, n - 1, 0), "reversed {n}");
        let i = inv(&double_path(n));
        let want = if n % 2 == 1 { (1, (n as i64 - 1) / 2) } else { (2, (n as i64 - 2) / 2) };
        assert_eq!((i.b, i.genus), want, "double {n}");
        let i = inv(&cycle(n));
        assert_eq!((i.b, i.p + i.p_dual, i.genus), (1, 1, 0), "cycle {n}");
        let i = inv(&double_cycle(n));
        let want = if n % 2 == 1 { (0, 3, (n as i64 - 1) / 2) } else { (0, 4, (n as i64 - 2) / 2) };
        assert_eq!((i.b, i.p + i.p_dual, i.genus), want, "doublecycle {n}");
    }
}

#[test]
fn euler_characteristic_by_hand() {
    for (name, q) in corpus() {
        let s = surface_from_quiver(&q);
        let i = invariants(&s).unwrap();
        assert_eq!(common::map_euler(&s), i.euler, "{name}");
        assert_eq!(i.euler, 2 * i.components as i64 - 2 * i.genus, "{name}");
    }
}

#[test]
fn dissections_give_the_quiver_and_its_dual() {
    for (name, q) in corpus() {
        let s = surface_from_quiver(&q);
        assert_eq!(quiver_from_surface(&s, Which::D).unwrap(), q, "{name}");
        assert!(quiver_from_surface(&s, Which::DualD).unwrap().is_isomorphic(&q.koszul_dual()), "{name}");
        let t = swap_dissections(&s);
        assert!(quiver_from_surface(&t, Which::D).unwrap().is_isomorphic(&q.koszul_dual()), "{name}");
        assert!(maps_isomorphic(&swap_dissections(&t), &s, true), "{name}");
        assert!(maps_isomorphic(&dual_dissection(&strip(&s, Which::D)).unwrap(), &s, false), "{name}");
    }
}

#[test]
fn curves_round_trip_and_cross_like_kisses() {
    for (name, q) in corpus().into_iter().filter(|(n, _)| !n.starts_with("doublecycle:4") && !n.starts_with("doublecycle:5")) {
        let b = blossom(&q);
        let s = surface_from_blossom(&b);
        let walks = enumerate_walks(&b, 4).walks;
        let curves: Vec<_> = walks.iter().map(|w| curve_of_walk(&s, &b, w).unwrap()).collect();
        for (w, c) in walks.iter().zip(&curves) {
            assert_eq!(walk_of_curve(&s, c).unwrap().1, *w, "{name}");
        }
        for i in 0..walks.len().min(25) {
            for j in 0..walks.len().min(25) {
                assert_eq!(crossing_count(&s, &curves[i], &curves[j]).unwrap(), mutual_kiss(&b, &walks[i], &walks[j]));
            }
        }
    }
}

#[test]
fn curves_from_another_surface_are_refused() {
    let b = blossom(&reversed_path(2));
    let s = surface_from_blossom(&b);
    let other = surface_from_quiver(&reversed_path(3));
    let c = curve_of_walk(&s, &b, &nonkissing::peak_walk(&b, 0)).unwrap();
    assert_eq!(walk_of_curve(&other, &c).unwrap_err(), SurfaceError::DifferentSurface);
}

#[test]
fn json_dump_lists_every_dart() {
    let s = surface_from_quiver(&double_path(3));
    let v = s.to_json_value();
    assert_eq!(v["darts"].as_array().unwrap().len(), s.n_darts());
    assert_eq!(v["points"].as_array().unwrap().len(), s.points().len());
}
