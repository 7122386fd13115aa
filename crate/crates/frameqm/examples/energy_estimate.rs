//! Physical scale of the confinement potential: |V| ~ ħ²/(8mR²) for a
//! curve of radius R, in the meV range for nanoscale structures.
//!
//!     cargo run -p frameqm --example energy_estimate

use frameqm::potentials::{energy_scale, ELECTRON_MASS};

fn main() {
    println!("R (m)      E (J)          E (meV)");
    for r in [1e-9, 1e-8, 5e-8, 1e-7] {
        let e = energy_scale(r, ELECTRON_MASS);
        println!("{r:8.0e}  {:.4e}   {:.4e}", e.e_j, e.e_mev);
    }

    let base = energy_scale(1e-8, ELECTRON_MASS);
    let half = energy_scale(2e-8, ELECTRON_MASS);
    println!(
        "\ndoubling R divides the estimate by {:.12}",
        base.e_j / half.e_j
    );
}
