//! The generalised Demazure product on the double affine Weyl semigroup of
//! affine `SL2`, computed through the quantum Bruhat graph and length
//! positive sets.
//!
//! ```
//! use affine_demazure::{dem_product, parse_element};
//!
//! let x = parse_element("s0 s1 s0 e[2a-4d+1L]").unwrap();
//! let y = parse_element("s1 t[-1] e[1a-1d+1L]").unwrap();
//! let res = dem_product(x, y).unwrap();
//! assert_eq!(res.product.to_string(), "s0 e[1a-2d+2L]");
//! assert_eq!(res.defect, 1);
//! ```

pub mod demazure;
pub mod error;
pub mod golden;
pub mod lp;
pub mod qbg;
pub mod roots;
pub mod text;
pub mod titscone;
pub mod verify;
pub mod weyl;

pub use demazure::{dem_product, min_pairs, DemazureResult, MinPairs};
pub use error::{Error, Result};
pub use lp::{lp_set, LpSet};
pub use roots::{AffineRoot, Coweight, DoubleAffineRoot, Sign};
pub use text::{parse_coweight, parse_element, parse_root, parse_weyl};
pub use titscone::{wt_length, wt_mul, WtElement};
pub use weyl::{FinitePart, Letter, Side, WeylElt};
