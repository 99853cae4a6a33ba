"""Static classification data shipped with the package."""
