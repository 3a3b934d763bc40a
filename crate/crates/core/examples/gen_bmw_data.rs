//! Regenerates the shipped BMW matrix files under `data/` from the doubled
//! Hecke construction.  The files are committed; this exists so their
//! provenance is reproducible:
//!
//! ```sh
//! cargo run -p bshuffle --example gen_bmw_data
//! ```

use bshuffle::bmw::{doubled_hecke_bmw, doubled_hecke_bmw_flipped};
use bshuffle::repmat::save_yb_matrix;

fn main() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&dir).expect("create data dir");
    let a = doubled_hecke_bmw().expect("construction validates");
    save_yb_matrix(&a, dir.join("bmw_n4_nu_qm3.json")).expect("write");
    let b = doubled_hecke_bmw_flipped().expect("construction validates");
    save_yb_matrix(&b, dir.join("bmw_n4_nu_mq3.json")).expect("write");
    println!("wrote {}", dir.display());
}
