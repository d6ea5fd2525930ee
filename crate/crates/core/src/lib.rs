pub mod cartan;
pub mod chamber;
pub mod folding;
pub mod monoid;
pub mod semifield;
pub mod verify;
pub mod weyl;
