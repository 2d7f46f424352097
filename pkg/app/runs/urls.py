"""
URL mappings for the stored run APIs.
"""

from django.urls import (
    path,
    include
)

from rest_framework.routers import DefaultRouter

from runs import views

router = DefaultRouter()
router.register('runs', views.SolveRunViewSet)

# Used for reverse mapping
app_name = 'runs'

urlpatterns = [
    path('', include(router.urls)),
]
