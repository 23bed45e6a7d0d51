pub mod detection;
pub mod dsl;
pub mod engine;
pub mod farey;
pub mod knot;
pub mod logic;
pub mod report;
pub mod slope;
