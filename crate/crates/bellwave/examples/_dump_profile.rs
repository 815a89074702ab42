use bellwave::physics::*;
fn main() {
    let cfg = RunConfig::desk();
    let u = cfg.units();
    let g = cfg.collision_geometry().unwrap();
    let modes = g.selected_modes().unwrap();
    println!("k_lattice = {:.6e} 1/m", cfg.lattice_wavevector());
    println!("T0 = {:.6e} s, E0 = {:.6e} J", u.time(), u.energy());
    println!("dx_int = {:.8}", cfg.grid.spatial_step_m * cfg.lattice_wavevector());
    println!("dt_int = {:.8}", cfg.grid.time_step_s / u.time());
    println!("mass_a_int = {:.8}", u.mass_to_internal(cfg.species.a.mass_kg));
    println!("halo center/radius (pk units) = {:.6}", g.halo_center_a / g.p_k);
    println!("modes: a_up=({:.4},{:.4}) b_up=({:.4},{:.4}) [pk]", modes.a_up.x/g.p_k, modes.a_up.z/g.p_k, modes.b_up.x/g.p_k, modes.b_up.z/g.p_k);
    println!("omega_a_int = {:.6}, omega_b_int = {:.6}", u.angular_frequency_to_internal(cfg.trap.omega_a_rad_s), u.angular_frequency_to_internal(cfg.trap.omega_b_rad_s));
    println!("sigma_int = {:.4}", (1.0/(2.0*1.0*u.angular_frequency_to_internal(cfg.trap.omega_b_rad_s))).sqrt());
    println!("collide_int = {:.4}", u.time_to_internal(cfg.sequence.collision_window_s));
    println!("t1_int = {:.4}, t2_int = {:.4}, expand_int = {:.4}", u.time_to_internal(cfg.sequence.t1_s), u.time_to_internal(cfg.sequence.t2_s), u.time_to_internal(cfg.sequence.expand_s));
    println!("pulse_duration_int = {:.4}", u.time_to_internal(cfg.species.a.pulse_duration_s));
    println!("g_int = {:.4}", u.energy_to_internal(cfg.collision.interaction_strength_j));
    println!("sigma_interaction_int = {:.4}", u.length_to_internal(cfg.collision.interaction_width_m));
    println!("total_int = {:.4}", u.time_to_internal(cfg.total_duration_s()));
}
