//! Surface curvature as the obstruction to nilpotency: the structure
//! equation dω¹₂ = −K θ¹∧θ², cap holonomy on the sphere, and the way
//! developable surfaces keep a confinement potential while restoring a
//! flat connection.
//!
//!     cargo run -p frameqm --example surface_holonomy

use frameqm::surfaces::{self, LoopRect};
use std::f64::consts::PI;

fn main() {
    // Sphere: obstruction residual and the pi/3 polar-cap loop.
    let sphere = surfaces::sphere_patch(1.0, 1e-3, PI / 2.0, 128, 128);
    println!(
        "sphere obstruction residual |d omega + K dA| = {:.2e}",
        surfaces::obstruction_residual(&sphere).unwrap()
    );

    let nv = 129;
    let step = PI / 384.0;
    let cap = surfaces::sphere_patch(1.0, step, step * nv as f64, 512, nv);
    let rec = surfaces::holonomy_check(&cap, LoopRect::FullU { j0: 1, j1: 127 }).unwrap();
    println!(
        "pi/3 cap: loop integral  = {:+.6} (expected -pi = {:+.6})",
        rec.loop_integral, -PI
    );
    println!("          -area integral = {:+.6}", -rec.area_integral);
    println!("          Stokes mismatch = {:.2e}", rec.mismatch);
    println!(
        "          half-connection holonomy factor = {:.6}",
        rec.half_holonomy_factor
    );

    // Cylinder: extrinsically curved, intrinsically flat.
    let cylinder = surfaces::cylinder_patch(1.0, 2.0, 128, 49);
    let forms = surfaces::fundamental_forms(&cylinder).unwrap();
    let rec = surfaces::holonomy_check(&cylinder, LoopRect::FullU { j0: 4, j1: 44 }).unwrap();
    let dev = surfaces::developable_check(&cylinder, &forms, None);
    println!(
        "\ncylinder: loop integral = {:.2e}, K bound = {:.2e}",
        rec.loop_integral, dev.max_abs_gauss
    );
    println!(
        "          developable = {}, V_dC = {:+.4} (pure confinement, no holonomy)",
        dev.is_developable,
        dev.v_dc[[0, 24]]
    );

    // Cone: still developable, potential varies along the rulings.
    let cone = surfaces::cone_patch(0.6, 0.5, 2.0, 128, 65);
    let forms = surfaces::fundamental_forms(&cone).unwrap();
    let dev = surfaces::developable_check(&cone, &forms, None);
    println!(
        "cone:     developable = {}, V_dC from {:+.4} (near apex) to {:+.4} (far)",
        dev.is_developable,
        dev.v_dc[[5, 5]],
        dev.v_dc[[5, 60]]
    );

    let sphere_forms = surfaces::fundamental_forms(&sphere).unwrap();
    let dev = surfaces::developable_check(&sphere, &sphere_forms, None);
    println!(
        "sphere:   developable = {} (K = 1 everywhere)",
        dev.is_developable
    );
}
