//! Structure relations of a Fermi strip: connection coefficients, the
//! Gauss compatibility residual, the frame commutator, and the agreement
//! of the moving-frame Laplacian with the divergence form.
//!
//!     cargo run -p frameqm --example fermi_net_checks

use frameqm::curves::CurvatureProfile;
use frameqm::nets;
use frameqm::numerics::{self, Boundary};

fn tanh_profile(n: usize) -> CurvatureProfile {
    let s = numerics::linspace(-8.0, 8.0, n);
    let h = s[1] - s[0];
    CurvatureProfile::planar(
        s.iter().map(|x| 2.0 * x.tanh()).collect(),
        h,
        Boundary::Open,
    )
}

fn main() {
    let net = nets::fermi_net(&tanh_profile(256), 0.125, 64).unwrap();
    let coeff = nets::net_connection(&net);

    // h1 = 1 + rho*kappa, h2 = 1 puts the strip in geodesic-normal form:
    // k1 = kappa/(1 + rho*kappa) and k2 vanishes identically.
    let max_k2 = coeff.k2.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    println!("max |k2| on the Fermi strip = {max_k2:.2e}");

    let coarse = nets::gauss_residual(&net);
    let fine_net = nets::fermi_net(&tanh_profile(511), 0.125, 127).unwrap();
    let fine = nets::gauss_residual(&fine_net);
    println!(
        "Gauss residual |e1 k2 - e2 k1 - (k1^2 + k2^2)|: {coarse:.3e} -> {fine:.3e}, order {:.2}",
        numerics::convergence_order(coarse, fine)
    );

    let f = net.grid_fn_centered(|s, rho| s.sin() * (-rho * rho).exp());
    let comm = nets::commutator_residual(&net, &f);
    println!("commutator residual |([e1,e2] - k1 e1 - k2 e2) f| = {comm:.3e}");

    let lap_frame = nets::moving_frame_laplacian(&net, &f);
    let lap_div = nets::divergence_laplacian(&net, &f);
    let mut diff = lap_frame;
    diff.zip_mut_with(&lap_div, |a, b| *a -= *b);
    println!(
        "frame-form vs divergence-form Laplacian: max diff = {:.3e}",
        net.interior_max(&diff, 3)
    );
}
