"""Program and theory texts shared by the tests."""

RUNNING_EXAMPLE = """\
a :- &sum{x;y}=4.
&sum{y;z}=2 :- a.
"""

MARGIN = """\
margin :- &diff{x-y}<=10.
&diff{x-y}<=0 :- not margin.
&diff{y-x}<=0 :- not margin.
"""

MARGIN_SHIFTED = """\
margin :- &diff{x-y}<=10.
:- &diff{y-x}<=-1, not margin.
:- &diff{x-y}<=-1, not margin.
"""

MARGIN_WITH_ZY = MARGIN + "&diff{z-y}<=20 :- not margin.\n"

MARGIN_WITH_ZX = MARGIN + "&diff{z-x}<=20 :- not margin.\n"
