//! Empty: this package only hosts the `acceptance` test target.
