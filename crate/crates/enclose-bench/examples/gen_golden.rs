//! Regenerates the checked-in golden SVGs after an intentional rendering
//! change: `cargo run -p enclose-bench --example gen_golden`.

use enclose_core::svg::{figure_filename, render_figure, FIGURE_COUNT};

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../enclose-core/tests/golden");
    for id in 1..=FIGURE_COUNT {
        let svg = render_figure(id, 800).unwrap();
        std::fs::write(dir.join(figure_filename(id)), svg).unwrap();
    }
    println!("wrote {FIGURE_COUNT} figures to {}", dir.display());
}
