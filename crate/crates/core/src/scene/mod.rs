//! Scene files, random polygon generators and SVG rendering.

mod format;
mod generate;
mod render;

pub use format::{load_scene, save_scene, Scene, SceneError};
pub use generate::{random_simple, random_starshaped, random_starshaped_with_center};
pub use render::{render_svg, Layer, Overlays, RenderSpec};
