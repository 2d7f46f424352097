"""
URL mappings for the square checking APIs.
"""
from django.urls import path

from latin import views

# Used for reverse mapping
app_name = 'latin'

urlpatterns = [
    path('verify/', views.VerifySquareView.as_view(), name='verify'),
    path(
        'transversals/',
        views.TransversalListView.as_view(),
        name='transversals',
    ),
]
