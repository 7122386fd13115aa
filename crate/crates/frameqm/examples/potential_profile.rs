//! Curvature potentials of a planar curve: the curvature-induced well
//! −κ²/4 and the SUSY partner pair V± = (κ/2)² ± (κ/2)′.
//!
//!     cargo run -p frameqm --example potential_profile

use frameqm::curves::CurvatureProfile;
use frameqm::numerics::{linspace, Boundary};
use frameqm::potentials;

fn main() {
    // κ(s) = 2 tanh(s): the classic reflectionless profile. Its partner
    // pair is the Pöschl–Teller well 1 − 2 sech²(s) against the free
    // constant 1.
    let n = 513;
    let s = linspace(-8.0, 8.0, n);
    let h = s[1] - s[0];
    let profile = CurvatureProfile::planar(
        s.iter().map(|x| 2.0 * x.tanh()).collect(),
        h,
        Boundary::Open,
    );

    let dacosta = potentials::dacosta_curve(&profile);
    let partners = potentials::susy_partners(&profile);

    println!("s        kappa      V_dC       V+         V-");
    for i in (0..n).step_by(64) {
        println!(
            "{:+6.2}  {:+8.4}  {:+8.4}  {:+8.4}  {:+8.4}",
            s[i],
            profile.kappa[i],
            dacosta.values[i],
            partners.plus.values[i],
            partners.minus.values[i]
        );
    }

    // The partner pair always averages to κ²/4 = -V_dC.
    let mut worst = 0.0f64;
    for i in 0..n {
        let avg = 0.5 * (partners.plus.values[i] + partners.minus.values[i]);
        worst = worst.max((avg + dacosta.values[i]).abs());
    }
    println!("\nmax |(V+ + V-)/2 + V_dC| = {worst:.2e}");
    assert!(worst < 1e-12);

    // Reversing the curve orientation swaps the partners exactly.
    let reversed = potentials::susy_partners(&potentials::orientation_reverse(&profile));
    let swapped = (0..n).all(|i| reversed.plus.values[i] == partners.minus.values[n - 1 - i]);
    println!("orientation reversal swaps V+ <-> V-: {swapped}");
}
