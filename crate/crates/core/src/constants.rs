//! Physical constants shared across the crate.

/// Speed of light in vacuum, m/s (exact).
pub const C_LIGHT: f64 = 299_792_458.0;

/// Earth rotation rate, rad/s.
pub const EARTH_ROTATION_RATE: f64 = 7.292_115_9e-5;

/// Earth equatorial radius, m (spherical-earth model).
pub const EARTH_RADIUS: f64 = 6_378_137.0;

/// Geocentric gravitational constant GM, m^3/s^2.
pub const GM_EARTH: f64 = 3.986_004_418e14;

/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;
