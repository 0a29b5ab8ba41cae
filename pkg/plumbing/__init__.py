"""Local fundamental groups of normal crossings divisors given by their plumbing graphs."""
