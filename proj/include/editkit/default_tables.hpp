#pragma once

// Generated by scripts/gen_tables.py from the same rows as data/*.tsv.

#include <string_view>

namespace editkit::default_tsv {

inline constexpr std::string_view k_number_words = R"tsv(zero	0
one	1
two	2
three	3
four	4
five	5
six	6
seven	7
eight	8
nine	9
ten	10
eleven	11
twelve	12
thirteen	13
fourteen	14
fifteen	15
sixteen	16
seventeen	17
eighteen	18
nineteen	19
twenty	20
twenty-one	21
twenty-two	22
twenty-three	23
twenty-four	24
twenty-five	25
twenty-six	26
twenty-seven	27
twenty-eight	28
twenty-nine	29
thirty	30
thirty-one	31
thirty-two	32
thirty-three	33
thirty-four	34
thirty-five	35
thirty-six	36
thirty-seven	37
thirty-eight	38
thirty-nine	39
forty	40
forty-one	41
forty-two	42
forty-three	43
forty-four	44
forty-five	45
forty-six	46
forty-seven	47
forty-eight	48
forty-nine	49
fifty	50
fifty-one	51
fifty-two	52
fifty-three	53
fifty-four	54
fifty-five	55
fifty-six	56
fifty-seven	57
fifty-eight	58
fifty-nine	59
sixty	60
sixty-one	61
sixty-two	62
sixty-three	63
sixty-four	64
sixty-five	65
sixty-six	66
sixty-seven	67
sixty-eight	68
sixty-nine	69
seventy	70
seventy-one	71
seventy-two	72
seventy-three	73
seventy-four	74
seventy-five	75
seventy-six	76
seventy-seven	77
seventy-eight	78
seventy-nine	79
eighty	80
eighty-one	81
eighty-two	82
eighty-three	83
eighty-four	84
eighty-five	85
eighty-six	86
eighty-seven	87
eighty-eight	88
eighty-nine	89
ninety	90
ninety-one	91
ninety-two	92
ninety-three	93
ninety-four	94
ninety-five	95
ninety-six	96
ninety-seven	97
ninety-eight	98
ninety-nine	99
)tsv";

inline constexpr std::string_view k_place_aliases = R"tsv(alabama	alabama
alaska	alaska
arizona	arizona
arkansas	arkansas
california	california
colorado	colorado
connecticut	connecticut
delaware	delaware
florida	florida
georgia	georgia
hawaii	hawaii
idaho	idaho
illinois	illinois
indiana	indiana
iowa	iowa
kansas	kansas
kentucky	kentucky
louisiana	louisiana
maine	maine
maryland	maryland
massachusetts	massachusetts
michigan	michigan
minnesota	minnesota
mississippi	mississippi
missouri	missouri
montana	montana
nebraska	nebraska
nevada	nevada
new hampshire	new hampshire
new jersey	new jersey
new mexico	new mexico
new york	new york
north carolina	north carolina
north dakota	north dakota
ohio	ohio
oklahoma	oklahoma
oregon	oregon
pennsylvania	pennsylvania
rhode island	rhode island
south carolina	south carolina
south dakota	south dakota
tennessee	tennessee
texas	texas
utah	utah
vermont	vermont
virginia	virginia
washington	washington
west virginia	west virginia
wisconsin	wisconsin
wyoming	wyoming
ak	alaska
az	arizona
ar	arkansas
ca	california
fl	florida
ga	georgia
ia	iowa
il	illinois
ks	kansas
ky	kentucky
md	maryland
mi	michigan
mn	minnesota
nc	north carolina
nd	north dakota
ne	nebraska
nh	new hampshire
nj	new jersey
nm	new mexico
nv	nevada
ny	new york
ri	rhode island
sc	south carolina
sd	south dakota
tn	tennessee
tx	texas
ut	utah
va	virginia
vt	vermont
wa	washington
wi	wisconsin
wv	west virginia
wy	wyoming
la	los angeles
l.a.	los angeles
los angeles	los angeles
nyc	new york city
n.y.c.	new york city
new york city	new york city
big apple	new york city
sf	san francisco
san fran	san francisco
frisco	san francisco
san francisco	san francisco
vegas	las vegas
las vegas	las vegas
sin city	las vegas
philly	philadelphia
dc	washington dc
d.c.	washington dc
washington dc	washington dc
washington d.c.	washington dc
nola	new orleans
new orleans	new orleans
slc	salt lake city
salt lake city	salt lake city
salt lake	salt lake city
kc	kansas city
kansas city	kansas city
atl	atlanta
windy city	chicago
chi-town	chicago
beantown	boston
st. louis	saint louis
st louis	saint louis
saint louis	saint louis
st. paul	saint paul
st paul	saint paul
saint paul	saint paul
ft. worth	fort worth
ft worth	fort worth
fort worth	fort worth
ft. lauderdale	fort lauderdale
ft lauderdale	fort lauderdale
fort lauderdale	fort lauderdale
san diego	san diego
san jose	san jose
san antonio	san antonio
santa clara	santa clara
santa monica	santa monica
santa barbara	santa barbara
santa cruz	santa cruz
palo alto	palo alto
mountain view	mountain view
long beach	long beach
el paso	el paso
oklahoma city	oklahoma city
okc	oklahoma city
jersey city	jersey city
virginia beach	virginia beach
colorado springs	colorado springs
baton rouge	baton rouge
des moines	des moines
new delhi	new delhi
mexico city	mexico city
cdmx	mexico city
hong kong	hong kong
buenos aires	buenos aires
cape town	cape town
tel aviv	tel aviv
kuala lumpur	kuala lumpur
kl	kuala lumpur
sao paulo	sao paulo
são paulo	sao paulo
rio de janeiro	rio de janeiro
rio	rio de janeiro
abu dhabi	abu dhabi
san juan	san juan
st petersburg	saint petersburg
saint petersburg	saint petersburg
mpls	minneapolis
indy	indianapolis
cincy	cincinnati
abq	albuquerque
jax	jacksonville
)tsv";

inline constexpr std::string_view k_abbreviations = R"tsv(st	street
str	street
ave	avenue
av	avenue
blvd	boulevard
rd	road
dr	drive
ln	lane
hwy	highway
pkwy	parkway
ct	court
pl	place
sq	square
mt	mount
ft	fort
apt	apartment
bldg	building
ste	suite
hts	heights
intl	international
int'l	international
ctr	center
fwy	freeway
expy	expressway
$	dollar
usd	dollar
€	euro
eur	euro
£	pound
gbp	pound
¥	yen
jpy	yen
₹	rupee
inr	rupee
cad	canadian dollar
aud	australian dollar
)tsv";

inline constexpr std::string_view k_stopwords = R"tsv(a
about
above
after
again
against
all
also
am
an
and
any
are
aren't
as
at
be
because
been
before
being
below
between
both
but
by
can
can't
cannot
could
couldn't
did
didn't
do
does
doesn't
doing
don't
down
during
each
few
for
from
further
had
hadn't
has
hasn't
have
haven't
having
he
he'd
he'll
he's
her
here
here's
hers
herself
him
himself
his
how
how's
i
i'd
i'll
i'm
i've
if
in
into
is
isn't
it
it's
its
itself
just
let's
like
me
more
most
mustn't
my
myself
no
nor
not
now
of
off
on
once
only
or
other
ought
our
ours
ourselves
out
over
own
please
same
shan't
she
she'd
she'll
she's
should
shouldn't
so
some
such
than
that
that's
the
their
theirs
them
themselves
then
there
there's
these
they
they'd
they'll
they're
they've
this
those
through
to
too
under
until
up
very
was
wasn't
we
we'd
we'll
we're
we've
were
weren't
what
what's
when
when's
where
where's
which
while
who
who's
whom
why
why's
will
with
won't
would
wouldn't
you
you'd
you'll
you're
you've
your
yours
yourself
yourselves
'll
're
've
'd
'm
's
n't
)tsv";

}  // namespace editkit::default_tsv
