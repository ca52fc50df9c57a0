//! Kernels, cell decompositions, and the catalog of kernel shapes.
//!
//! The occurrence graph of `π` joins entries to the 3412 occurrences they
//! belong to; the kernel is the component holding the entry of value 1. The
//! remaining entries fall into the `s × s` cells cut out by the kernel, and
//! the labels of those cells determine how a kernel shape contributes to the
//! generating functions.

mod catalog;
mod cells;
mod graph;
mod validate;

pub use catalog::{kernel_shapes_of_size, psi_shape, shape_catalog, shape_catalog_capped};
pub use cells::{cell_decomposition, classify_cells, decompose, CellClass, CellContents, CellGrid, ShapeRecord};
pub use graph::{is_kernel_involution, kernel_of, occurrence_graph, Kernel, OccurrenceGraph};
pub use validate::{
    predicted_census, validate_classification, validate_shapes, validate_shapes_bounded, ValidationReport, Violation,
    ViolationKind,
};
