//! Compute the spectral radius of `alpha*D + (1-alpha)*A` on a few graphs,
//! compare the iterative and dense routes, and certify an upper bound
//! without eigensolving.

use aalpha::graph::{cycle_graph, path_graph, star_graph};
use aalpha::spectrum::{
    build_a_alpha, dense_spectral_radius, spectral_bounds, spectral_radius, verify_certificate,
    AlphaValue,
};
use nalgebra::DVector;

fn main() {
    let alpha = AlphaValue::new(0.5).unwrap();
    for (name, g) in [
        ("P_6", path_graph(6)),
        ("C_5", cycle_graph(5)),
        ("K_{1,4}", star_graph(4)),
    ] {
        let power = spectral_radius(&g, alpha).unwrap();
        let dense = dense_spectral_radius(&g, alpha).unwrap();
        let bounds = spectral_bounds(&g, alpha).unwrap();
        println!("{name}: rho = {:.12}", power.rho);
        println!(
            "  iterations {}, residual {:.2e}",
            power.iterations, power.residual
        );
        println!(
            "  dense route agrees to {:.2e}",
            (power.rho - dense.rho).abs()
        );
        println!(
            "  sandwich: {:.4} <= rho <= {}, degree bound {:.4}",
            bounds.lower_adjacency, bounds.upper_max_degree, bounds.lower_alpha_degree
        );
        println!(
            "  perron head: {:?}\n",
            &power.perron[..3.min(power.perron.len())]
        );
    }

    // certify rho(P_3 adjacency) < 1.5 with a positive vector: each row of
    // M*y must stay strictly under 1.5*y
    let m = build_a_alpha(&path_graph(3), AlphaValue::new(0.0).unwrap());
    let y = DVector::from_vec(vec![1.0, 2f64.sqrt(), 1.0]);
    let certified = verify_certificate(&m, &y, 1.5).unwrap();
    println!("certificate rho(P_3) < 1.5 with y = (1, sqrt2, 1): {certified}");
}
