pub mod fan;
pub mod model;
pub mod orbits;

pub use fan::{colored_fan, ColoredCone, ColoredFan};
pub use model::{ClosedOrbit, Model, SliceDatum};
pub use orbits::{orbit_poset, OrbitDescriptor, OrbitPoset, Stabilizer};
