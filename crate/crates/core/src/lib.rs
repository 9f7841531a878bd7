//! Cache-oblivious selection of the `k`th smallest element of a sorted
//! `X + Y` matrix, plus the external-memory cache simulator used to measure
//! its block transfers.
//!
//! ```
//! use xyselect::{fj_select, SortedInput};
//!
//! let (x, y) = SortedInput::pair(vec![1.0, 2.0, 3.0, 4.0], vec![10.0, 20.0, 30.0, 40.0]).unwrap();
//! assert_eq!(fj_select(&x, &y, 8).unwrap().as_finite(), Some(24.0));
//! ```

pub mod cell;
pub mod error;
pub mod fj;
pub mod input;
pub mod iosim;
pub mod oracle;
pub mod permute;
pub mod select;
pub mod value;

pub use cell::{cell_max, cell_min, lex_compare, Cell};
pub use error::{Error, Result};
pub use fj::{fj_select, naive_fj_select, select_with, IterationReport, Outcome, Strategy};
pub use input::{pad_length, SortedInput};
pub use permute::{beta1, beta2, build_views, pbr, PermutedViews};
pub use select::{partition3, select_kth, select_kth_slice, KeyedItem};
pub use value::ExtendedValue;
