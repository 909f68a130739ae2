//! Cuspidal characters of GL_n(q) and the cuspidal sum at a Coxeter-torus generator.

use hookline_groups::classical::{build_group, Family};
use hookline_groups::parabolic::{avoids_parabolics, cancel_verify};
use hookline_groups::support::coxeter_torus_generator;

#[test]
fn cancel_identity() {
    for (q, degree) in [(2u64, 3u64), (3, 16), (4, 45)] {
        let rep = cancel_verify(3, q).unwrap();
        assert!(rep.ok(), "{rep:?}");
        assert_eq!(rep.cuspidal_degree, degree);
        // (q³ − q)/3 cuspidal characters of GL₃(q)
        assert_eq!(rep.cuspidal.len() as u64, (q * q * q - q) / 3);
        // the central scalars c·I with c³ = 1
        let central = if q % 3 == 1 { 3 } else { 1 };
        assert_eq!(rep.terms.len(), central);
        if q == 2 {
            assert_eq!(rep.terms[0].lhs, "-9");
        }
        if q == 3 {
            assert_eq!(rep.terms[0].rhs, "-96");
        }
    }
}

#[test]
fn coxeter_class_avoids_parabolics() {
    for q in [2u64, 3] {
        let g = build_group(Family::GL, 3, q).unwrap();
        let t = coxeter_torus_generator(3, q).unwrap();
        assert!(avoids_parabolics(&g, t.t.pack()).unwrap());
        // a transvection does lie in the Borel subgroup
        let mut u = hookline_groups::Matrix::identity(3);
        u.set(0, 1, 1);
        assert!(!avoids_parabolics(&g, u.pack()).unwrap());
    }
}
