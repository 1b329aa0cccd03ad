pub mod fps;
pub mod partitions;
pub mod qexpr;
pub mod verify;
