//! Shared test support: an independent Conway-polynomial oracle evaluated by
//! skein recursion on link diagrams. Kept out of the library on purpose; the
//! invariant code must never call it.

pub mod skein;
