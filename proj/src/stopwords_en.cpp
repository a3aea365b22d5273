// Pinned default English stopword list. The entries match what the tokenizer
// can actually produce: contractions appear as their apostrophe-split parts
// (don't -> don, t), so the split parts are listed, not the contractions.

namespace plagdetect::detail {

const char* default_stopword_text() {
    return R"(# default english stopwords, one per line
a
about
above
across
after
again
against
ain
all
also
although
am
among
an
and
any
are
aren
around
as
at
be
because
been
before
behind
being
below
beside
besides
between
beyond
both
but
by
can
cannot
could
couldn
d
despite
did
didn
do
does
doesn
doing
don
down
during
each
either
except
few
for
from
further
had
hadn
has
hasn
have
haven
having
he
her
here
hers
herself
him
himself
his
how
however
i
if
in
inside
into
is
isn
it
its
itself
just
ll
m
ma
may
me
might
mightn
more
most
must
mustn
my
myself
near
needn
neither
no
nor
not
now
o
of
off
on
once
only
onto
or
other
our
ours
ourselves
out
outside
over
own
re
s
same
shall
shan
she
should
shouldn
since
so
some
such
t
than
that
the
their
theirs
them
themselves
then
there
therefore
these
they
this
those
though
through
thus
to
too
toward
towards
under
underneath
unless
until
up
upon
ve
very
was
wasn
we
were
weren
what
when
where
whether
which
while
who
whom
why
will
with
within
without
won
would
wouldn
y
you
your
yours
yourself
yourselves
)";
}

}  // namespace plagdetect::detail
